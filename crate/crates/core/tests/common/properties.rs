//! Exhaustive and randomized property checks. Each returns a description
//! of the first failure so the same checks can back both `#[test]`
//! functions and the acceptance report.

use idemsum_core::classifier::regime_label;
use idemsum_core::group::is_generator;
use idemsum_core::{
    enumerate_multisets, find_smooth_generator, generate_family, idempotent_sum_witness, is_g_smooth,
    is_idempotent_sum, is_idempotent_sum_free, is_minimal_idempotent_sum, is_one_smooth, sequence_index,
    structure_condition, Element, Family, IndexValue, SemigroupParams, Sequence, SmoothKind,
};
use proptest::collection::vec;
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use super::*;

pub type Check = Result<(), String>;

/// A named property check.
pub type NamedCheck = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn params(k: u32, n: u32) -> SemigroupParams {
    SemigroupParams::new(k, n).expect("positive parameters")
}

/// `(k, n)` with `k, n ≥ 1` and `k + n ≤ limit`.
fn pairs_up_to(limit: u32) -> Vec<(u32, u32)> {
    (1..limit)
        .flat_map(|k| (1..=limit - k).map(move |n| (k, n)))
        .collect()
}

fn residues(n: u32, terms: &[u32]) -> Vec<u32> {
    terms.iter().map(|&t| t % n).collect()
}

fn smooth_code(kind: SmoothKind) -> u8 {
    match kind {
        SmoothKind::NotSmooth => 0,
        SmoothKind::Smooth => 1,
        SmoothKind::ZeroSumSmooth => 2,
    }
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

// --- semigroup arithmetic ---

/// Associativity, commutativity, the unique idempotent at `⌈k/n⌉n`, the
/// residue map as a homomorphism, and agreement with the generator model,
/// for every `k + n ≤ 10`.
pub fn semigroup_laws() -> Check {
    for (k, n) in pairs_up_to(10) {
        let p = params(k, n);
        let els: Vec<Element> = p.elements().collect();
        let mut idempotents = Vec::new();
        for &a in &els {
            for &b in &els {
                let ab = p.add(a, b).unwrap();
                ensure!(ab == p.add(b, a).unwrap(), "{p}: {a:?}+{b:?} not commutative");
                ensure!(
                    ab.index() == naive_add(k, n, a.index(), b.index()),
                    "{p}: {a:?}+{b:?} = {ab:?} disagrees with the generator model"
                );
                let psi = (p.psi(a).unwrap().value() + p.psi(b).unwrap().value()) % n;
                ensure!(
                    p.psi(ab).unwrap().value() == psi,
                    "{p}: residue map not additive at {a:?},{b:?}"
                );
                for &c in &els {
                    let left = p.add(ab, c).unwrap();
                    let right = p.add(a, p.add(b, c).unwrap()).unwrap();
                    ensure!(left == right, "{p}: not associative at {a:?},{b:?},{c:?}");
                }
            }
            if p.is_idempotent(a).unwrap() {
                idempotents.push(a.index());
            }
        }
        ensure!(
            idempotents == vec![k.div_ceil(n) * n],
            "{p}: idempotents {idempotents:?}"
        );
        ensure!(p.idempotent().index() == p.threshold(), "{p}: idempotent index");
    }
    Ok(())
}

// --- sums of subsequences ---

/// The capped profile answers "some subsequence sum is ≥ cap and ≡ r" and
/// lists the exact sums below the cap, for every sequence of length ≤ 12
/// over `k + n ≤ 8` and every cap ≤ k + 2n.
pub fn profile_matches_bruteforce() -> Check {
    for (k, n) in pairs_up_to(8) {
        let p = params(k, n);
        for len in 0..=12 {
            for terms in enumerate_multisets(p.size(), len) {
                let sums = raw_subset_sums(&terms);
                let seq = Sequence::from_indices(p, &terms).unwrap();
                for cap in 1..=k + 2 * n {
                    let profile = seq.sum_profile(cap).unwrap();
                    for r in 0..n {
                        let want = sums
                            .iter()
                            .any(|&s| s >= u64::from(cap) && s % u64::from(n) == u64::from(r));
                        ensure!(
                            profile.exists_sum_at_least(cap, r) == want,
                            "{p} {terms:?} cap {cap} residue {r}: profile says {}",
                            !want
                        );
                    }
                    let exact: Vec<u32> = sums
                        .iter()
                        .filter(|&&s| s < u64::from(cap))
                        .map(|&s| s as u32)
                        .collect();
                    ensure!(
                        profile.exact_sums() == exact,
                        "{p} {terms:?} cap {cap}: exact sums"
                    );
                }
            }
        }
    }
    Ok(())
}

/// `σ(T)` against the generator model, its residue against `Σ ind`, and
/// the idempotent-sum criterion against `σ(T)` being idempotent.
pub fn sigma_and_idempotent_sum() -> Check {
    for (k, n) in pairs_up_to(8) {
        let p = params(k, n);
        for len in 1..=8 {
            for terms in enumerate_multisets(p.size(), len) {
                let seq = Sequence::from_indices(p, &terms).unwrap();
                let sigma = seq.sigma().unwrap();
                ensure!(sigma.index() == naive_sigma(k, n, &terms), "{p} {terms:?}: sigma");
                ensure!(
                    u64::from(sigma.index()) % u64::from(n) == seq.index_sum() % u64::from(n),
                    "{p} {terms:?}: sigma residue"
                );
                ensure!(
                    is_idempotent_sum(&seq).unwrap() == p.is_idempotent(sigma).unwrap(),
                    "{p} {terms:?}: index-sum criterion disagrees with sigma"
                );
            }
        }
    }
    Ok(())
}

/// The enumerator produces exactly the nondecreasing tuples, in order.
pub fn enumeration_matches_recursion() -> Check {
    for u in 1..=8 {
        for len in 0..=8 {
            let got: Vec<Vec<u32>> = enumerate_multisets(u, len).collect();
            ensure!(got == tuples(1, u, len), "universe {u} length {len}");
            ensure!(
                idemsum_core::multiset_count(u, len) == got.len() as u128,
                "count for universe {u} length {len}"
            );
        }
    }
    Ok(())
}

// --- classification ---

/// Freeness, minimality and the witness against explicit enumeration of
/// all subsequences, for `k + n ≤ 8` and length ≤ 8.
pub fn classifier_matches_bruteforce() -> Check {
    for (k, n) in pairs_up_to(8) {
        let p = params(k, n);
        for len in 1..=8 {
            for terms in enumerate_multisets(p.size(), len) {
                let seq = Sequence::from_indices(p, &terms).unwrap();
                let free = naive_free(k, n, &terms);
                ensure!(
                    is_idempotent_sum_free(&seq) == free,
                    "{p} {terms:?}: free should be {free}"
                );
                let minimal = naive_minimal(k, n, &terms);
                ensure!(
                    is_minimal_idempotent_sum(&seq).unwrap() == minimal,
                    "{p} {terms:?}: minimal should be {minimal}"
                );
                match idempotent_sum_witness(&seq) {
                    None => ensure!(free, "{p} {terms:?}: no witness for a non-free sequence"),
                    Some(w) => {
                        let w = w.indices();
                        ensure!(!free, "{p} {terms:?}: witness for a free sequence");
                        ensure!(
                            naive_is_idempotent_sum(k, n, &w),
                            "{p} {terms:?}: witness {w:?} is not idempotent-sum"
                        );
                        ensure!(
                            sub_multisets(&terms).contains(&w),
                            "{p} {terms:?}: witness {w:?} not a subsequence"
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

/// Non-1-smooth positive multisets have `Σ h ≥ 2|H|`, with equality only
/// for `1^[ℓ-1]·(ℓ+1)` and `2^[ℓ]`; `|H| ≤ 7`, values ≤ 16.
pub fn non_smooth_sum_bound() -> Check {
    for len in 1..=7usize {
        let l = len as u32;
        let mut near = vec![1; len - 1];
        near.push(l + 1);
        let twos = vec![2; len];
        for h in tuples(1, 16, len) {
            let smooth = is_one_smooth(&h).unwrap();
            ensure!(
                smooth == naive_one_smooth(&h),
                "{h:?}: 1-smooth should be {}",
                !smooth
            );
            if smooth {
                continue;
            }
            let sum: u32 = h.iter().sum();
            ensure!(sum >= 2 * l, "{h:?}: non-smooth with sum {sum} < {}", 2 * l);
            let extremal = h == near || h == twos;
            ensure!((sum == 2 * l) == extremal, "{h:?}: equality case mismatch");
        }
    }
    Ok(())
}

/// For `k ≤ n`, a sequence is idempotent-sum free (resp. minimal
/// idempotent-sum) iff its residue image is zero-sum free (resp. minimal
/// zero-sum); `n ≤ 7`, length ≤ 7.
pub fn reduction_to_residues() -> Check {
    for n in 1..=7 {
        for k in 1..=n {
            let p = params(k, n);
            for len in 1..=7 {
                for terms in enumerate_multisets(p.size(), len) {
                    let seq = Sequence::from_indices(p, &terms).unwrap();
                    let r = residues(n, &terms);
                    ensure!(
                        is_idempotent_sum_free(&seq) == naive_zero_sum_free(n, &r),
                        "{p} {terms:?}: free vs zero-sum free"
                    );
                    ensure!(
                        is_minimal_idempotent_sum(&seq).unwrap() == naive_minimal_zero_sum(n, &r),
                        "{p} {terms:?}: minimal vs minimal zero-sum"
                    );
                }
            }
        }
    }
    Ok(())
}

fn minimal_zero_sums(n: u32) -> Vec<Vec<u32>> {
    (1..=n as usize)
        .flat_map(|len| tuples(0, n - 1, len))
        .filter(|r| naive_minimal_zero_sum(n, r))
        .collect()
}

fn is_zero_sum_smooth(n: u32, r: &[u32]) -> bool {
    naive_generators(n)
        .into_iter()
        .any(|g| naive_g_smooth(n, r, g) == 2)
}

/// For every minimal zero-sum sequence over `Z/nZ`, `2 ≤ n ≤ 8` (the
/// residue images of minimal idempotent-sum sequences when `k ≤ n`):
/// zero-sum smooth implies index 1, and index 1 with length above `n/2`
/// implies zero-sum smooth. The library index agrees with a table-based
/// discrete-log computation throughout.
pub fn index_and_smoothness() -> Check {
    for n in 2..=8 {
        for r in minimal_zero_sums(n) {
            let idx = sequence_index(n, &r).unwrap();
            let (num, den) = naive_index(n, &r);
            ensure!(
                idx == IndexValue {
                    numerator: num,
                    denominator: den
                },
                "n={n} {r:?}: index {idx} vs {num}/{den}"
            );
            let smooth = is_zero_sum_smooth(n, &r);
            if smooth {
                ensure!(idx.is_one(), "n={n} {r:?}: zero-sum smooth with index {idx}");
            }
            if 2 * r.len() > n as usize && idx.is_one() {
                ensure!(smooth, "n={n} {r:?}: index 1 and long, yet not zero-sum smooth");
            }
        }
    }
    Ok(())
}

/// The library's decomposition test (1-smooth discrete logs with
/// `Σ n_i ≤ n`) matches the definition via the subsequence-sum set, for
/// every multiset of residues over `Z/nZ`, `2 ≤ n ≤ 8`, length ≤ n.
pub fn g_smooth_matches_definition() -> Check {
    for n in 2..=8 {
        for len in 1..=n as usize {
            for r in tuples(0, n - 1, len) {
                for g in naive_generators(n) {
                    let got = smooth_code(is_g_smooth(n, &r, g).unwrap());
                    let want = naive_g_smooth(n, &r, g);
                    ensure!(got == want, "n={n} g={g} {r:?}: kind {got} vs {want}");
                }
                let first = naive_generators(n)
                    .into_iter()
                    .find_map(|g| match naive_g_smooth(n, &r, g) {
                        0 => None,
                        kind => Some((g, kind)),
                    });
                let got = find_smooth_generator(n, &r)
                    .unwrap()
                    .map(|(g, kind)| (g, smooth_code(kind)));
                ensure!(got == first, "n={n} {r:?}: smooth generator {got:?} vs {first:?}");
            }
        }
    }
    Ok(())
}

/// Dropping a minimal term from a non-1-smooth multiset of length ≥ 2
/// leaves it non-1-smooth; randomized over `|H| ≤ 10`, values ≤ 20.
pub fn drop_minimal_term() -> Check {
    let strategy = vec(1u32..=20, 2..=10).prop_map(|mut h| {
        h.sort_unstable();
        h
    });
    runner(4096)
        .run(&strategy, |h| {
            let rest = &h[1..];
            if is_one_smooth(rest).unwrap() && !is_one_smooth(&h).unwrap() {
                return Err(TestCaseError::fail(format!("{h:?}")));
            }
            if naive_one_smooth(rest) && !naive_one_smooth(&h) {
                return Err(TestCaseError::fail(format!("oracle: {h:?}")));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// `ind(u·R) = ind(R)` for every unit `u`; `n ≤ 8`, length ≤ 5.
pub fn index_scaling_invariance() -> Check {
    for n in 2..=8 {
        for len in 1..=5 {
            for r in tuples(0, n - 1, len) {
                let base = sequence_index(n, &r).unwrap();
                for u in (1..n).filter(|&u| is_generator(n, u)) {
                    let scaled: Vec<u32> = r.iter().map(|&x| x * u % n).collect();
                    let v = sequence_index(n, &scaled).unwrap();
                    ensure!(v == base, "n={n} {r:?} scaled by {u}: {v} vs {base}");
                }
            }
        }
    }
    Ok(())
}

// --- group-side structure ---

/// Over `Z/nZ`, `n ≤ 8`: zero-sum free of length `n-1` means `g^[n-1]`,
/// and minimal zero-sum of length `n` means `g^[n]`, with `ord(g) = n`.
pub fn extremal_lengths_are_constant() -> Check {
    for n in 2..=8 {
        for r in tuples(0, n - 1, n as usize - 1) {
            if naive_zero_sum_free(n, &r) {
                ensure!(
                    r.iter().all(|&x| x == r[0]) && order(n, r[0]) == n,
                    "n={n}: zero-sum free {r:?} of length n-1"
                );
            }
        }
        for r in tuples(0, n - 1, n as usize) {
            if naive_minimal_zero_sum(n, &r) {
                ensure!(
                    r.iter().all(|&x| x == r[0]) && order(n, r[0]) == n,
                    "n={n}: minimal zero-sum {r:?} of length n"
                );
            }
        }
    }
    Ok(())
}

/// Over `Z/nZ`, `2 ≤ n ≤ 6`: for nonzero-term `T` of length in
/// `[n-1, n+3]`, if removing a longest zero-sum subsequence leaves `n-1`
/// terms, then `T` is constant with a term of order `n`.
pub fn longest_zero_sum_remainder() -> Check {
    for n in 2..=6 {
        for len in n as usize - 1..=n as usize + 3 {
            for t in tuples(1, n - 1, len) {
                // lengths of zero-sum subsequences, including the empty one
                let longest = sub_multisets(&t)
                    .iter()
                    .filter(|s| naive_zero_sum(n, s))
                    .map(|s| s.len())
                    .max()
                    .unwrap_or(0);
                if t.len() - longest == n as usize - 1 {
                    ensure!(
                        t.iter().all(|&x| x == t[0]) && order(n, t[0]) == n,
                        "n={n}: {t:?} leaves n-1 terms"
                    );
                }
            }
        }
    }
    Ok(())
}

/// Over `Z/nZ`, `3 ≤ n ≤ 8`: zero-sum free sequences of length at least
/// `⌊n/2⌋ + 1` are g-smooth for a generator `g`.
pub fn long_zero_sum_free_are_smooth() -> Check {
    for n in 3..=8 {
        for len in n as usize / 2 + 1..=n as usize - 1 {
            for r in tuples(1, n - 1, len) {
                if naive_zero_sum_free(n, &r) {
                    let smooth = naive_generators(n)
                        .into_iter()
                        .any(|g| naive_g_smooth(n, &r, g) == 1);
                    ensure!(smooth, "n={n}: zero-sum free {r:?} is not smooth");
                }
            }
        }
    }
    Ok(())
}

// --- witness families ---

/// Every constructible family member has its documented shape: the
/// exceptional `k > n` members are free, not 1-smooth and of the critical
/// length; the lower-bound witnesses are free (or minimal) and lack the
/// smooth structure. Checked against the brute-force oracles.
pub fn families_have_their_shape() -> Check {
    for (k, n) in pairs_up_to(14) {
        let p = params(k, n);
        let mut families = vec![
            Family::RemarkV,
            Family::CaseIi,
            Family::CaseIv,
            Family::CaseV,
            Family::SmallW,
            Family::LargeV,
            Family::LargeW,
        ];
        families.extend((3..=p.size()).map(|z| Family::CaseIii { z }));
        for f in families {
            let Ok(seq) = generate_family(p, f) else { continue };
            let t = seq.indices();
            let small = t.len() <= 12;
            match f {
                Family::RemarkV => {
                    ensure!(t.len() as u32 == n / 2, "{p} {f}: length");
                    ensure!(is_idempotent_sum_free(&seq), "{p} {f}: not free");
                    ensure!(!structure_condition(&seq), "{p} {f}: smooth");
                    ensure!(
                        find_smooth_generator(n, &residues(n, &t)).unwrap().is_none(),
                        "{p} {f}: smooth residue image"
                    );
                }
                Family::CaseIi | Family::CaseIii { .. } | Family::CaseIv | Family::CaseV => {
                    let (q, nn) = (p.quotient(), n);
                    ensure!(
                        2 * (t.len() as u32 + 1) == (q + 1) * nn,
                        "{p} {f}: length {} off the critical length",
                        t.len()
                    );
                    ensure!(is_idempotent_sum_free(&seq), "{p} {f}: not free");
                    ensure!(!is_one_smooth(&t).unwrap(), "{p} {f}: 1-smooth");
                    if small {
                        ensure!(naive_free(k, n, &t), "{p} {f}: oracle says not free");
                    }
                }
                Family::SmallW => {
                    ensure!(is_minimal_idempotent_sum(&seq).unwrap(), "{p} {f}: not minimal");
                    ensure!(
                        !is_zero_sum_smooth(n, &residues(n, &t)),
                        "{p} {f}: zero-sum smooth"
                    );
                    ensure!(naive_minimal(k, n, &t), "{p} {f}: oracle says not minimal");
                }
                Family::LargeV => {
                    ensure!(is_idempotent_sum_free(&seq), "{p} {f}: not free");
                    if !t.is_empty() {
                        ensure!(!is_one_smooth(&t).unwrap(), "{p} {f}: 1-smooth");
                    }
                    if small {
                        ensure!(naive_free(k, n, &t), "{p} {f}: oracle says not free");
                    }
                }
                Family::LargeW => {
                    ensure!(is_minimal_idempotent_sum(&seq).unwrap(), "{p} {f}: not minimal");
                    ensure!(!is_one_smooth(&t).unwrap(), "{p} {f}: 1-smooth");
                    if small {
                        ensure!(naive_minimal(k, n, &t), "{p} {f}: oracle says not minimal");
                    }
                }
            }
            ensure!(
                regime_label(p) == if k > n { "k>n" } else { "k<=n" },
                "{p}: regime label"
            );
        }
    }
    Ok(())
}

// --- text format ---

/// Canonical text re-parses to the same multiset, for random sequences.
pub fn text_round_trip() -> Check {
    let strategy = (1u32..=6, 1u32..=6).prop_flat_map(|(k, n)| {
        let size = k + n - 1;
        (proptest::strategy::Just((k, n)), vec(1..=size, 0..=12))
    });
    runner(2048)
        .run(&strategy, |((k, n), terms)| {
            let p = params(k, n);
            let seq = Sequence::from_indices(p, &terms).unwrap();
            let text = seq.to_text();
            let back = Sequence::parse(p, &text).map_err(|e| TestCaseError::fail(e.to_string()))?;
            if back != seq {
                return Err(TestCaseError::fail(format!("{terms:?} -> {text:?}")));
            }
            let mut sorted = terms.clone();
            sorted.sort_unstable();
            if idemsum_core::parse_indices(&text).unwrap() != sorted {
                return Err(TestCaseError::fail(format!("{terms:?} -> {text:?}")));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Every property check, by name.
pub fn all() -> Vec<NamedCheck> {
    vec![
        ("semigroup laws", semigroup_laws),
        ("capped profile vs brute force", profile_matches_bruteforce),
        ("sigma and idempotent-sum criterion", sigma_and_idempotent_sum),
        ("enumeration vs recursion", enumeration_matches_recursion),
        ("classifier vs brute force", classifier_matches_bruteforce),
        ("non-smooth sum bound and equality cases", non_smooth_sum_bound),
        ("reduction to residues for k <= n", reduction_to_residues),
        ("index and zero-sum smoothness", index_and_smoothness),
        ("g-smooth test vs definition", g_smooth_matches_definition),
        ("dropping a minimal term", drop_minimal_term),
        ("index scaling invariance", index_scaling_invariance),
        ("constant extremal sequences", extremal_lengths_are_constant),
        ("longest zero-sum remainder", longest_zero_sum_remainder),
        (
            "long zero-sum free sequences are smooth",
            long_zero_sum_free_are_smooth,
        ),
        ("witness family shapes", families_have_their_shape),
        ("text round trip", text_round_trip),
    ]
}
