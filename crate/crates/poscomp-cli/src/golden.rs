//! Golden `map` invocations: fixed inputs whose outputs must reproduce
//! byte for byte, exercised through the same argv path the binary uses.

use poscomp::verify::Check;

/// (label, map arguments, exact expected stdout minus the final newline)
pub const GOLDEN_CASES: &[(&str, &[&str], &str)] = &[
    (
        "choose2 fwd 3_3+4_1+6_5+3_1",
        &[
            "map", "--bijection", "choose2", "--direction", "fwd",
            "--input", "3_3+4_1+6_5+3_1",
        ],
        "7_{3,4}+10_{5,7}",
    ),
    (
        "choose2 rev 7_{3,4}+10_{5,7}",
        &[
            "map", "--bijection", "choose2", "--direction", "rev",
            "--input", "7_{3,4}+10_{5,7}",
        ],
        "3_3+4_1+6_5+3_1",
    ),
    (
        "choose2 fwd 4_2+3_1+5_4+2_1+1_1",
        &[
            "map", "--bijection", "choose2", "--direction", "fwd",
            "--input", "4_2+3_1+5_4+2_1+1_1",
        ],
        "7_{2,5}+7_{4,6}+2_{1,2}",
    ),
    (
        "choose2 rev 7_{2,5}+7_{4,6}+2_{1,2}",
        &[
            "map", "--bijection", "choose2", "--direction", "rev",
            "--input", "7_{2,5}+7_{4,6}+2_{1,2}",
        ],
        "4_2+3_1+5_4+2_1+1_1",
    ),
    (
        "ternary fwd 1+2_2+1+6_4+4",
        &[
            "map", "--bijection", "ternary", "--direction", "fwd",
            "--input", "1+2_2+1+6_4+4",
        ],
        "00200002221111",
    ),
    (
        "ternary rev 00200002221111",
        &[
            "map", "--bijection", "ternary", "--direction", "rev",
            "--input", "00200002221111",
        ],
        "1+2_2+1+6_4+4",
    ),
    (
        "binary rev 1101111110000",
        &[
            "map", "--bijection", "binary", "--direction", "rev",
            "--input", "1101111110000",
        ],
        "1+2+1+6+4 12",
    ),
    (
        "binary fwd 1+2_2+1+6_4+4",
        &[
            "map", "--bijection", "binary", "--direction", "fwd",
            "--input", "1+2_2+1+6_4+4",
        ],
        "1101111110000",
    ),
    (
        "perm fwd 1,2,6,7,3,4,5,8,9,10,12,13,11",
        &[
            "map", "--bijection", "perm", "--direction", "fwd",
            "--input", "1,2,6,7,3,4,5,8,9,10,12,13,11",
        ],
        "3+4_2+4+2_2",
    ),
    (
        "perm rev 3+4_2+4+2_2",
        &[
            "map", "--bijection", "perm", "--direction", "rev",
            "--input", "3+4_2+4+2_2",
        ],
        "1,2,6,7,3,4,5,8,9,10,12,13,11",
    ),
    (
        "color2 fwd 3_3+1_1+6_4+4_4",
        &[
            "map", "--bijection", "color2", "--direction", "fwd",
            "--input", "3_3+1_1+6_4+4_4",
        ],
        "1+2_2+1+6_4+2+2_2",
    ),
    (
        "color2 rev 1+2_2+1+6_4+2+2_2",
        &[
            "map", "--bijection", "color2", "--direction", "rev",
            "--input", "1+2_2+1+6_4+2+2_2",
        ],
        "3_3+1_1+6_4+4_4",
    ),
];

/// Run every golden case through [`crate::run`] and report one check
/// per case.
pub fn golden_checks() -> Vec<Check> {
    GOLDEN_CASES
        .iter()
        .map(|(label, args, expected)| {
            let mut argv = vec!["poscomp"];
            argv.extend_from_slice(args);
            let mut buffer = Vec::new();
            let code = crate::run(&argv, &mut buffer);
            let got = String::from_utf8_lossy(&buffer);
            let want = format!("{expected}\n");
            if code == 0 && got == want {
                Check::pass(format!("golden {label}"))
            } else {
                Check::fail(
                    format!("golden {label}"),
                    format!("exit {code}, output {got:?}, want {want:?}"),
                )
            }
        })
        .collect()
}
