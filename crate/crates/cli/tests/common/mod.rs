#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub status: i32,
}

/// One or more cases per verb, plus the failure and error paths.
pub const CASES: &[Case] = &[
    Case {
        name: "pfk_exp_k3",
        args: &["pfk", "--series", "exp", "--k", "3"],
        status: 0,
    },
    Case {
        name: "pfk_qexp_k2",
        args: &["pfk", "--series", "qexp", "--k", "2"],
        status: 0,
    },
    Case {
        name: "pfk_geom_det_text",
        args: &[
            "pfk", "--series", "geom", "--k", "3", "--method", "det", "--t", "2", "--format", "text",
        ],
        status: 0,
    },
    Case {
        name: "pfk_prodroots_k2",
        args: &["pfk", "--series", "prodroots:2", "--k", "2", "--method", "rec"],
        status: 0,
    },
    Case {
        name: "invert_exp",
        args: &["invert", "--series", "exp", "--order", "6"],
        status: 0,
    },
    Case {
        name: "invert_qexp_text",
        args: &["invert", "--series", "qexp", "--order", "3", "--format", "text"],
        status: 0,
    },
    Case {
        name: "conjugate_exp",
        args: &["conjugate", "--series", "exp", "--order", "3"],
        status: 0,
    },
    Case {
        name: "conjugate_poly_text",
        args: &[
            "conjugate",
            "--series",
            "poly:1,2,-1/3",
            "--order",
            "3",
            "--format",
            "text",
        ],
        status: 0,
    },
    Case {
        name: "roots_exp_k3",
        args: &["roots", "--series", "exp", "--k", "3"],
        status: 0,
    },
    Case {
        name: "roots_qexp_k2_text",
        args: &["roots", "--series", "qexp", "--k", "2", "--format", "text"],
        status: 0,
    },
    Case {
        name: "hl_m2_k2",
        args: &["hl", "--m", "2", "--k", "2"],
        status: 0,
    },
    Case {
        name: "hl_m3_k2_text",
        args: &["hl", "--m", "3", "--k", "2", "--format", "text"],
        status: 0,
    },
    Case {
        name: "verify_conjugation_exp",
        args: &["verify", "--identity", "conjugation", "--series", "exp", "--order", "6"],
        status: 0,
    },
    Case {
        name: "verify_zk_poly",
        args: &["verify", "--identity", "zk", "--series", "poly:1,1,0,2", "--order", "4"],
        status: 0,
    },
    Case {
        name: "verify_ftxfx_q_text",
        args: &[
            "verify",
            "--identity",
            "ftxfx",
            "--series",
            "exp",
            "--t",
            "q",
            "--order",
            "4",
            "--format",
            "text",
        ],
        status: 0,
    },
    Case {
        name: "verify_pfk_mult",
        args: &[
            "verify",
            "--identity",
            "pfk-mult",
            "--series",
            "poly:1,-1/2,3",
            "--s",
            "2",
            "--t",
            "-1/3",
            "--k",
            "4",
        ],
        status: 0,
    },
    Case {
        name: "verify_qexp_factorization_text",
        args: &[
            "verify",
            "--identity",
            "qexp-factorization",
            "--k",
            "3",
            "--format",
            "text",
        ],
        status: 0,
    },
    Case {
        name: "verify_qexp_shift",
        args: &["verify", "--identity", "qexp-shift", "--n", "2", "--order", "4"],
        status: 0,
    },
    Case {
        name: "verify_hl",
        args: &["verify", "--identity", "hl", "--m", "2", "--k", "3"],
        status: 0,
    },
    Case {
        name: "fail_perturbed_conjugation",
        args: &[
            "verify",
            "--identity",
            "conjugation",
            "--series",
            "exp",
            "--order",
            "4",
            "--perturb",
            "3",
        ],
        status: 1,
    },
    Case {
        name: "fail_perturbed_ftxfx_text",
        args: &[
            "verify",
            "--identity",
            "ftxfx",
            "--series",
            "geom",
            "--t",
            "3",
            "--order",
            "3",
            "--perturb",
            "2",
            "--format",
            "text",
        ],
        status: 1,
    },
    Case {
        name: "error_vanishing",
        args: &[
            "verify",
            "--identity",
            "conjugation",
            "--series",
            "poly:1,1,0",
            "--order",
            "4",
        ],
        status: 2,
    },
    Case {
        name: "error_bad_spec",
        args: &["pfk", "--series", "poly:2,1"],
        status: 2,
    },
    Case {
        name: "error_unknown_verb",
        args: &["frobnicate"],
        status: 2,
    },
    Case {
        name: "error_order_too_small",
        args: &["pfk", "--series", "exp", "--k", "5", "--order", "4"],
        status: 2,
    },
];

pub struct Run {
    pub status: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

pub fn run_binary(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_adjoint-kit"))
        .args(args)
        .env_remove("ADJOINT_KIT_ORDER")
        .output()
        .expect("binary runs");
    Run {
        status: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: out.stderr,
    }
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.out"))
}

/// Compare one case against its golden file; `UPDATE_GOLDEN=1` rewrites it.
pub fn check_case(case: &Case) -> Result<(), String> {
    let first = run_binary(case.args);
    let second = run_binary(case.args);
    if first.status != case.status {
        return Err(format!(
            "{}: exit {} (expected {}), stderr: {}",
            case.name,
            first.status,
            case.status,
            String::from_utf8_lossy(&first.stderr)
        ));
    }
    if first.stdout != second.stdout || first.stderr != second.stderr || first.status != second.status {
        return Err(format!("{}: output differs between two runs", case.name));
    }
    let path = golden_path(case.name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &first.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != first.stdout {
        return Err(format!(
            "{}: stdout differs from golden file\n--- expected\n{}\n--- actual\n{}",
            case.name,
            String::from_utf8_lossy(&expected),
            String::from_utf8_lossy(&first.stdout)
        ));
    }
    Ok(())
}
