//! Named verification suites: the same checks back the CLI `verify`
//! subcommand and the acceptance test target, so CI and humans always
//! run identical code.

use num_bigint::{BigInt, BigUint};

use crate::bijections::{
    binary_to_skeleton, choose_two_to_odd, color2_to_even, comp_to_binary, even_to_color2,
    even_to_perm, even_to_ternary, odd_binary_variant, odd_to_choose_two, peel_first, perm_to_even,
    ternary_to_even, unpeel, Peeled,
};
use crate::comp::{count_dp, enumerate, enumerate_choose_two, ColoringScheme};
use crate::oeis;
use crate::patterns::{
    contains_pattern, enumerate_321_separable, enumerate_ternary, parse_blocks, run_product,
    BinaryString, Permutation, TernaryBoundary,
};
use crate::series::{expand, gf_mk, recurrence_restricted};

/// Outcome of one verification case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn pass(label: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            pass: true,
            detail: String::new(),
        }
    }

    pub fn fail(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            pass: false,
            detail: detail.into(),
        }
    }
}

/// Tunable ranges; `None` picks the acceptance defaults stated with each
/// suite.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyConfig {
    pub max_n: Option<u64>,
    pub max_m: Option<u64>,
    pub offline: Option<bool>,
}

/// Triple agreement of enumeration, dynamic programming and generating
/// function for every `(m, k)` with `m <= max_m` (default 4), up to
/// `max_n` (default 14).
pub fn suite_counting(cfg: &VerifyConfig) -> Vec<Check> {
    let max_n = cfg.max_n.unwrap_or(14);
    let max_m = cfg.max_m.unwrap_or(4);
    let mut checks = Vec::new();
    for m in 1..=max_m {
        for k in 1..=m {
            let label = format!("counting ({m},{k}): enumerate = dp = gf for n <= {max_n}");
            let scheme = ColoringScheme::positional(m, k).expect("m >= 1");
            let series = match gf_mk(m, k).and_then(|gf| expand(&gf, max_n as usize)) {
                Ok(series) => series,
                Err(e) => {
                    checks.push(Check::fail(label, e.to_string()));
                    continue;
                }
            };
            let mut bad = None;
            for n in 1..=max_n {
                let enumerated = enumerate(&scheme, n).expect("positional schemes enumerate").count();
                let dp = count_dp(&scheme, n);
                let coeff = series.coeff(n as usize).expect("expanded far enough");
                if BigUint::from(enumerated) != dp || &BigInt::from(dp.clone()) != coeff {
                    bad = Some(format!(
                        "n={n}: enumerate={enumerated}, dp={dp}, gf={coeff}"
                    ));
                    break;
                }
            }
            checks.push(match bad {
                None => Check::pass(label),
                Some(detail) => Check::fail(label, detail),
            });
        }
    }
    checks
}

/// Computed EVEN and ODD sequences align with the A034943 / A095263
/// snapshots for at least 12 consecutive terms under a shift of at most
/// 3.
pub fn suite_oeis(cfg: &VerifyConfig) -> Vec<Check> {
    let offline = cfg.offline.unwrap_or(true);
    let max_n = cfg.max_n.unwrap_or(14);
    let cases = [
        ("A034943", ColoringScheme::even(), "EVEN"),
        ("A095263", ColoringScheme::odd(), "ODD"),
    ];
    cases
        .iter()
        .map(|(id, scheme, name)| {
            let label = format!("oeis {name} vs {id}");
            let computed: Vec<BigInt> = (1..=max_n)
                .map(|n| BigInt::from(count_dp(scheme, n)))
                .collect();
            let record = match oeis::fetch(id, offline) {
                Ok(r) => r,
                Err(e) => return Check::fail(label, e.to_string()),
            };
            match oeis::align(&record, &computed) {
                Ok(alignment) => {
                    let needed = oeis::required_matches(&record, &computed);
                    if alignment.matched >= needed {
                        Check::pass(format!(
                            "{label}: {} terms at shift {} ({})",
                            alignment.matched, alignment.shift, record.source
                        ))
                    } else {
                        Check::fail(
                            label,
                            format!("only {} matched, need {needed}", alignment.matched),
                        )
                    }
                }
                Err(e) => Check::fail(label, e.to_string()),
            }
        })
        .collect()
}

/// The restricted-color recurrence reproduces the dynamic-programming
/// counts: `(2,0)` up to 14, then `(2,1)`, `(3,0)`, `(3,1)` against the
/// enumerator up to 12.
pub fn suite_recurrence(cfg: &VerifyConfig) -> Vec<Check> {
    let deep = cfg.max_n.unwrap_or(14) as usize;
    let wide = deep.min(12);
    let mut checks = Vec::new();

    let label = format!("recurrence (2,0) = dp counts for n <= {deep}");
    match recurrence_restricted(2, 0, deep) {
        Err(e) => checks.push(Check::fail(label, e.to_string())),
        Ok(series) => {
            let scheme = ColoringScheme::restrict_colors(2, 0).expect("lo = 2");
            let bad = (1..=deep).find(|&n| {
                series.coeff(n) != Some(&BigInt::from(count_dp(&scheme, n as u64)))
            });
            checks.push(match bad {
                None => Check::pass(label),
                Some(n) => Check::fail(label, format!("first mismatch at n={n}")),
            });
        }
    }

    for (lo, d) in [(2u64, 1u64), (3, 0), (3, 1)] {
        let label = format!("recurrence ({lo},{d}) = enumeration counts for n <= {wide}");
        match recurrence_restricted(lo, d, wide) {
            Err(e) => checks.push(Check::fail(label, e.to_string())),
            Ok(series) => {
                let scheme = ColoringScheme::restrict_colors(lo, d).expect("lo >= 2");
                let bad = (1..=wide).find(|&n| {
                    let brute = enumerate(&scheme, n as u64)
                        .expect("restricted schemes enumerate")
                        .count();
                    series.coeff(n) != Some(&BigInt::from(brute))
                });
                checks.push(match bad {
                    None => Check::pass(label),
                    Some(n) => Check::fail(label, format!("first mismatch at n={n}")),
                });
            }
        }
    }
    checks
}

fn roundtrip_check<T, U, F, G>(label: String, items: Vec<T>, forward: F, back: G) -> Check
where
    T: PartialEq + std::fmt::Display + Clone,
    F: Fn(&T) -> Result<U, String>,
    G: Fn(&U) -> Result<T, String>,
{
    let mut count = 0usize;
    for item in items {
        let through = forward(&item).and_then(|mid| back(&mid));
        match through {
            Ok(again) if again == item => count += 1,
            Ok(again) => {
                return Check::fail(label, format!("{item} came back as {again}"));
            }
            Err(e) => return Check::fail(label, format!("{item}: {e}")),
        }
    }
    Check::pass(format!("{label} ({count} cases)"))
}

/// Both roundtrip directions of every forward/inverse pair over full
/// enumerations: compositions to `max_n` (default 12), permutations to
/// 8, ternary strings to length 12.
pub fn suite_roundtrips(cfg: &VerifyConfig) -> Vec<Check> {
    let max_n = cfg.max_n.unwrap_or(12);
    let max_perm = (cfg.max_n.unwrap_or(12).min(8)) as usize;
    let even = ColoringScheme::even();
    let odd = ColoringScheme::odd();
    let restrict2 = ColoringScheme::restrict_colors(2, 0).expect("lo = 2");
    let mut checks = Vec::new();

    let restricted: Vec<_> = (1..=max_n)
        .flat_map(|n| enumerate(&restrict2, n).expect("enumerable"))
        .collect();
    checks.push(roundtrip_check(
        format!("roundtrip color2 -> even -> color2, n <= {max_n}"),
        restricted,
        |c| color2_to_even(c).map_err(|e| e.to_string()),
        |c| even_to_color2(c).map_err(|e| e.to_string()),
    ));
    let evens: Vec<_> = (1..=max_n)
        .flat_map(|n| enumerate(&even, n).expect("enumerable"))
        .collect();
    checks.push(roundtrip_check(
        format!("roundtrip even -> color2 -> even, n <= {max_n}"),
        evens.clone(),
        |c| even_to_color2(c).map_err(|e| e.to_string()),
        |c| color2_to_even(c).map_err(|e| e.to_string()),
    ));

    let odds: Vec<_> = (1..=max_n)
        .flat_map(|n| enumerate(&odd, n).expect("enumerable"))
        .collect();
    checks.push(roundtrip_check(
        format!("roundtrip odd -> choose2 -> odd, n <= {max_n}"),
        odds,
        |c| odd_to_choose_two(c).map_err(|e| e.to_string()),
        |c| choose_two_to_odd(c).map_err(|e| e.to_string()),
    ));
    let spotted: Vec<_> = (2..=max_n).flat_map(enumerate_choose_two).collect();
    checks.push(roundtrip_check(
        format!("roundtrip choose2 -> odd -> choose2, n <= {max_n}"),
        spotted,
        |c| choose_two_to_odd(c).map_err(|e| e.to_string()),
        |c| odd_to_choose_two(c).map_err(|e| e.to_string()),
    ));

    checks.push(roundtrip_check(
        format!("roundtrip even -> ternary -> even, n <= {max_n}"),
        evens.clone(),
        |c| even_to_ternary(c).map_err(|e| e.to_string()),
        |s| ternary_to_even(s).map_err(|e| e.to_string()),
    ));
    let strings: Vec<_> = (1..=max_n as usize)
        .flat_map(|len| enumerate_ternary(len, TernaryBoundary::EvenImage))
        .collect();
    checks.push(roundtrip_check(
        format!("roundtrip ternary -> even -> ternary, len <= {max_n}"),
        strings,
        |s| ternary_to_even(s).map_err(|e| e.to_string()),
        |c| even_to_ternary(c).map_err(|e| e.to_string()),
    ));

    checks.push(roundtrip_check(
        format!("roundtrip even skeleton -> binary -> skeleton, n <= {max_n}"),
        evens.iter().map(|c| c.skeleton()).collect(),
        |skeleton| comp_to_binary(skeleton).map_err(|e| e.to_string()),
        |s| Ok(binary_to_skeleton(s).0),
    ));
    let binaries: Vec<_> = (1..=max_n.min(12) as u32)
        .flat_map(|len| {
            (0..1u32 << len).map(move |bits| {
                BinaryString::new(
                    (0..len).map(|i| ((bits >> (len - 1 - i)) & 1) as u8).collect(),
                )
                .expect("bits are 0 or 1")
            })
        })
        .collect();
    checks.push(roundtrip_check(
        format!("roundtrip binary -> skeleton -> binary, len <= {max_n}"),
        binaries,
        |s| Ok(binary_to_skeleton(s).0),
        |skeleton| comp_to_binary(skeleton).map_err(|e| e.to_string()),
    ));

    let perms: Vec<_> = (1..=max_perm)
        .flat_map(|k| enumerate_321_separable(k).expect("k is capped"))
        .collect();
    checks.push(roundtrip_check(
        format!("roundtrip perm -> even -> perm, k <= {max_perm}"),
        perms,
        |p| perm_to_even(p).map_err(|e| e.to_string()),
        |c| even_to_perm(c).map_err(|e| e.to_string()),
    ));
    let small_evens: Vec<_> = (1..=max_perm as u64)
        .flat_map(|n| enumerate(&even, n).expect("enumerable"))
        .collect();
    checks.push(roundtrip_check(
        format!("roundtrip even -> perm -> even, k <= {max_perm}"),
        small_evens,
        |c| even_to_perm(c).map_err(|e| e.to_string()),
        |p| perm_to_even(p).map_err(|e| e.to_string()),
    ));

    for (m, class) in [(2u64, 2u64), (3, 2), (3, 3)] {
        let scheme = ColoringScheme::positional(m, class).expect("m >= 1");
        let peelable: Vec<_> = (2..=max_n)
            .flat_map(|n| enumerate(&scheme, n).expect("enumerable"))
            .collect();
        checks.push(roundtrip_check(
            format!("roundtrip peel -> unpeel under ({m},{class}), n <= {max_n}"),
            peelable,
            |c| peel_first(c, &scheme).map_err(|e| e.to_string()),
            |p| unpeel(p, &scheme).map_err(|e| e.to_string()),
        ));
    }
    checks
}

/// Equinumerosity of every family with its composition count, up to 12
/// (permutations up to 8).
pub fn suite_equinumerosity(cfg: &VerifyConfig) -> Vec<Check> {
    let max_n = cfg.max_n.unwrap_or(12);
    let max_perm = max_n.min(8);
    let even = ColoringScheme::even();
    let odd = ColoringScheme::odd();
    let restrict2 = ColoringScheme::restrict_colors(2, 0).expect("lo = 2");
    let choose2 = ColoringScheme::choose_two();
    let e = |n: u64| count_dp(&even, n);
    let o = |n: u64| count_dp(&odd, n);
    let mut checks = Vec::new();

    checks.push({
        let label = format!("equinumerous restrict-color-2 = EVEN, n <= {max_n}");
        match (1..=max_n).find(|&n| count_dp(&restrict2, n) != e(n)) {
            None => Check::pass(label),
            Some(n) => Check::fail(label, format!("first mismatch at n={n}")),
        }
    });

    checks.push({
        let label = format!("equinumerous ODD(k) = choose-two(k+1), k <= {max_n}");
        match (1..=max_n).find(|&n| count_dp(&odd, n) != count_dp(&choose2, n + 1)) {
            None => Check::pass(label),
            Some(n) => Check::fail(label, format!("first mismatch at k={n}")),
        }
    });

    checks.push({
        let label = format!("equinumerous ternary even-image(k) = e(k), k <= {max_n}");
        match (1..=max_n).find(|&n| {
            let strings = enumerate_ternary(n as usize, TernaryBoundary::EvenImage).count();
            BigUint::from(strings) != e(n)
        }) {
            None => Check::pass(label),
            Some(n) => Check::fail(label, format!("first mismatch at k={n}")),
        }
    });

    checks.push({
        let label = format!("equinumerous ternary corollary(k-1) = o(k), 2 <= k <= {max_n}");
        match (2..=max_n).find(|&n| {
            let strings = enumerate_ternary(n as usize - 1, TernaryBoundary::Corollary).count();
            BigUint::from(strings) != o(n)
        }) {
            None => Check::pass(label),
            Some(n) => Check::fail(label, format!("first mismatch at k={n}")),
        }
    });

    let run_sums = |only_leading_one: bool, k: u32| -> BigUint {
        (0..1u64 << k)
            .filter(|bits| !only_leading_one || bits >> (k - 1) == 1)
            .map(|bits| {
                let s = BinaryString::new(
                    (0..k).map(|i| ((bits >> (k - 1 - i)) & 1) as u8).collect(),
                )
                .expect("bits are 0 or 1");
                run_product(&s)
            })
            .sum()
    };
    checks.push({
        let label = format!("equinumerous run products over length k = e(k+1), k <= {max_n}");
        match (1..=max_n as u32).find(|&k| run_sums(false, k) != e(k as u64 + 1)) {
            None => Check::pass(label),
            Some(k) => Check::fail(label, format!("first mismatch at k={k}")),
        }
    });
    checks.push({
        let label = format!("equinumerous run products over 1-leading strings = o(k), k <= {max_n}");
        match (1..=max_n as u32).find(|&k| run_sums(true, k) != o(k as u64)) {
            None => Check::pass(label),
            Some(k) => Check::fail(label, format!("first mismatch at k={k}")),
        }
    });
    checks.push({
        let label = format!(
            "equinumerous odd binary variant multiplicities = o(k), k <= {max_n} (no prepend)"
        );
        match (1..=max_n.min(12) as u32).find(|&k| {
            let total: BigUint = (0..1u64 << k)
                .filter(|bits| bits >> (k - 1) == 1)
                .map(|bits| {
                    let s = BinaryString::new(
                        (0..k).map(|i| ((bits >> (k - 1 - i)) & 1) as u8).collect(),
                    )
                    .expect("bits are 0 or 1");
                    odd_binary_variant(&s, false).expect("starts with 1").1
                })
                .sum();
            total != o(k as u64)
        }) {
            None => Check::pass(label),
            Some(k) => Check::fail(label, format!("first mismatch at k={k}")),
        }
    });

    checks.push({
        let label = format!("equinumerous 321-avoiding separable perms = e(k), k <= {max_perm}");
        match (1..=max_perm as usize).find(|&k| {
            let count = enumerate_321_separable(k).expect("k capped").len();
            BigUint::from(count) != e(k as u64)
        }) {
            None => Check::pass(label),
            Some(k) => Check::fail(label, format!("first mismatch at k={k}")),
        }
    });
    checks
}

/// The step-down identities: `e(k+1) = e(k) + o(k)` (default `k <= 13`)
/// and its `(m, k)` generalization for `m <= 5`, `l <= 14`, plus the
/// peel bijection realizing the split with the right fiber sizes.
pub fn suite_identities(cfg: &VerifyConfig) -> Vec<Check> {
    let max_eq = cfg.max_n.unwrap_or(13);
    let max_l = cfg.max_n.unwrap_or(14);
    let max_m = cfg.max_m.unwrap_or(5);
    let even = ColoringScheme::even();
    let odd = ColoringScheme::odd();
    let mut checks = Vec::new();

    checks.push({
        let label = format!("identity e(k+1) = e(k) + o(k), k <= {max_eq}");
        match (1..=max_eq)
            .find(|&k| count_dp(&even, k + 1) != count_dp(&even, k) + count_dp(&odd, k))
        {
            None => Check::pass(label),
            Some(k) => Check::fail(label, format!("first failure at k={k}")),
        }
    });

    checks.push({
        let label = format!(
            "identity c(m,k+1)(l+1) = c(m,k+1)(l) + c(m,k)(l), m <= {max_m}, l <= {max_l}"
        );
        let mut bad = None;
        'outer: for m in 2..=max_m {
            for k in 1..m {
                let upper = ColoringScheme::positional(m, k + 1).expect("m >= 1");
                let lower = ColoringScheme::positional(m, k).expect("m >= 1");
                for l in 1..=max_l {
                    if count_dp(&upper, l + 1) != count_dp(&upper, l) + count_dp(&lower, l) {
                        bad = Some(format!("m={m} k={k} l={l}"));
                        break 'outer;
                    }
                }
            }
        }
        match bad {
            None => Check::pass(label),
            Some(detail) => Check::fail(label, detail),
        }
    });

    for (m, class) in [(2u64, 2u64), (3, 2), (4, 3)] {
        let scheme = ColoringScheme::positional(m, class).expect("m >= 1");
        let lower = ColoringScheme::positional(m, class - 1).expect("m >= 1");
        let label = format!("identity peel splits ({m},{class}) with exact fibers, n <= 10");
        let mut bad = None;
        'split: for total in 2..=10u64 {
            let mut decremented = Vec::new();
            let mut removed = Vec::new();
            for c in enumerate(&scheme, total).expect("enumerable") {
                match peel_first(&c, &scheme) {
                    Ok(Peeled::Decremented(x)) => decremented.push(x),
                    Ok(Peeled::Removed(x)) => removed.push(x),
                    Err(e) => {
                        bad = Some(e.to_string());
                        break 'split;
                    }
                }
            }
            decremented.sort_by_key(|c| c.to_string());
            decremented.dedup();
            removed.sort_by_key(|c| c.to_string());
            removed.dedup();
            if BigUint::from(decremented.len()) != count_dp(&scheme, total - 1)
                || BigUint::from(removed.len()) != count_dp(&lower, total - 1)
            {
                bad = Some(format!(
                    "n={total}: fibers {} + {}",
                    decremented.len(),
                    removed.len()
                ));
                break;
            }
        }
        checks.push(match bad {
            None => Check::pass(label),
            Some(detail) => Check::fail(label, detail),
        });
    }
    checks
}

/// Block-parse success coincides with brute-force avoidance of
/// {321, 2413, 3142} for every permutation of `[k]`, `k <= 8`.
pub fn suite_parser(cfg: &VerifyConfig) -> Vec<Check> {
    let max_k = cfg.max_n.unwrap_or(8).min(8) as usize;
    let patterns = [
        Permutation::new(vec![3, 2, 1]).expect("valid pattern"),
        Permutation::new(vec![2, 4, 1, 3]).expect("valid pattern"),
        Permutation::new(vec![3, 1, 4, 2]).expect("valid pattern"),
    ];
    let mut checks = Vec::new();
    for k in 1..=max_k {
        let label = format!("parser = pattern avoidance, k = {k}");
        let mut total = 0usize;
        let mut parsed = 0usize;
        let mut bad = None;
        let mut values: Vec<u64> = (1..=k as u64).collect();
        loop {
            let p = Permutation::new(values.clone()).expect("candidate is a permutation");
            let avoids = patterns.iter().all(|pat| !contains_pattern(&p, pat));
            let parse = parse_blocks(&p);
            if parse.is_ok() != avoids {
                bad = Some(format!("{p}: parse {} vs avoidance {avoids}", parse.is_ok()));
                break;
            }
            if let Ok(d) = parse {
                parsed += 1;
                if d.reassemble() != p {
                    bad = Some(format!("{p}: reassembly differs"));
                    break;
                }
            }
            total += 1;
            if !crate::patterns::next_permutation(&mut values) {
                break;
            }
        }
        checks.push(match bad {
            None => Check::pass(format!("{label} ({parsed}/{total} parse)")),
            Some(detail) => Check::fail(label, detail),
        });
    }
    checks
}

/// The library-level suites, in the order the acceptance criteria list
/// them.
pub fn all_suites(cfg: &VerifyConfig) -> Vec<(&'static str, Vec<Check>)> {
    vec![
        ("counting", suite_counting(cfg)),
        ("oeis", suite_oeis(cfg)),
        ("recurrence", suite_recurrence(cfg)),
        ("roundtrips", suite_roundtrips(cfg)),
        ("equinumerosity", suite_equinumerosity(cfg)),
        ("identities", suite_identities(cfg)),
        ("parser", suite_parser(cfg)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyConfig {
        VerifyConfig {
            max_n: Some(7),
            max_m: Some(3),
            offline: Some(true),
        }
    }

    #[test]
    fn quick_suites_pass() {
        for (name, checks) in all_suites(&quick()) {
            for check in checks {
                assert!(check.pass, "suite {name}: {}: {}", check.label, check.detail);
            }
        }
    }
}
