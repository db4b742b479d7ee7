use std::process::{Command, Output};

fn fieldspin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fieldspin"))
        .args(args)
        .output()
        .expect("spawn fieldspin")
}

#[test]
fn invalid_configuration_exits_2() {
    for args in [
        &["verify", "--samples", "0"][..],
        &["verify", "--mass", "0"],
        &["verify", "--pmax", "-1"],
        &["table", "--mass", "nan"],
        &["wigner", "--boost-axis", "0,0,0"],
        &["wigner", "--momentum-axis", "1,2"],
    ] {
        assert_eq!(fieldspin(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_emits_one_json_line_per_check() {
    let out = fieldspin(&["verify", "--samples", "20"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(rows.len() > 40);
    for row in &rows {
        for key in [
            "check",
            "status",
            "max_residual",
            "tolerance",
            "samples",
            "seed",
            "notes",
        ] {
            assert!(row.get(key).is_some(), "{key}");
        }
    }
    let failing: Vec<_> = rows
        .iter()
        .filter(|r| r["status"] == "fail")
        .map(|r| r["check"].clone())
        .collect();
    assert_eq!(
        out.status.code(),
        Some(u8::from(!failing.is_empty()) as i32)
    );
}

#[test]
fn tiny_tolerance_fails_verify() {
    assert_eq!(
        fieldspin(&["verify", "--samples", "5", "--tol", "1e-30"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn wigner_csv_grid() {
    let out = fieldspin(&["wigner", "--steps", "2", "--format", "csv"]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(&out.stdout[..]);
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[0], "xi");
    let rows: Vec<_> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 9);
    let angle: f64 = rows[8][2].parse().unwrap();
    assert!((angle - (9.0f64 / 40.0).atan()).abs() < 1e-10);
}

#[test]
fn table_restricts_operators() {
    let out = fieldspin(&[
        "table",
        "--samples",
        "3",
        "--operator",
        "field",
        "--operator",
        "pl-spatial",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let ops: Vec<String> = text
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["operator"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(ops.len(), 8);
    assert!(ops.iter().all(|o| o == &ops[0] || o == &ops[1]));
}
