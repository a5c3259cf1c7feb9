//! End-to-end tests of the `extlift` binary against small fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const M4: &str = "matrix\n2 4\n1 2 0 0\n0 0 1 2\nvector 1 1\nheights 0 1 0 1\n";
const M2: &str = "matrix\n1 2\n1 1\nvector 1\nheights 0 1\n";
const IDENTITY: &str = "matrix\n2 2\n1 0\n0 1\n";

struct Fixture {
    dir: TempDir,
}

impl Fixture {
    fn new() -> Self {
        Fixture {
            dir: TempDir::new().unwrap(),
        }
    }

    fn write(&self, name: &str, content: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, content).unwrap();
        path
    }
}

fn extlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extlift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = extlift(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn bases_of_the_fixtures() {
    let fx = Fixture::new();
    let m4 = fx.write("m4.txt", M4);
    assert_eq!(
        stdout_of(&["--instance", m4.to_str().unwrap(), "bases"]),
        "1 3\n1 4\n2 3\n2 4\n"
    );
    let id = fx.write("id.txt", IDENTITY);
    assert_eq!(
        stdout_of(&["--instance", id.to_str().unwrap(), "bases"]),
        "1 2\n"
    );
}

#[test]
fn circuits_of_m2() {
    let fx = Fixture::new();
    let m2 = fx.write("m2.txt", M2);
    assert_eq!(
        stdout_of(&["--instance", m2.to_str().unwrap(), "circuits"]),
        "+1 -2\n"
    );
    assert_eq!(
        stdout_of(&["--instance", m2.to_str().unwrap(), "cocircuits"]),
        "+1 +2\n"
    );
}

#[test]
fn bijection_rows_are_verified() {
    let fx = Fixture::new();
    let m4 = fx.write("m4.txt", M4);
    let out = stdout_of(&["--instance", m4.to_str().unwrap(), "bijection"]);
    assert_eq!(
        out,
        "1 3\t2 4\tg 1 3\ttrue\n\
         1 4\t2\tg 1 4\ttrue\n\
         2 3\t4\tg 2 3\ttrue\n\
         2 4\t-\tg 2 4\ttrue\n"
    );
}

#[test]
fn compatible_equals_regions_and_counts() {
    let fx = Fixture::new();
    let m4 = fx.write("m4.txt", M4);
    let path = m4.to_str().unwrap();
    let compatible = stdout_of(&["--instance", path, "compatible"]);
    let regions = stdout_of(&["--instance", path, "regions"]);
    assert_eq!(compatible, "-\n2\n4\n2 4\n");
    assert_eq!(compatible, regions);
    let count = stdout_of(&["--instance", path, "count"]);
    assert_eq!(count, "bases\t4\ncompatible\t4\nregions\t4\nequal\ttrue\n");
}

#[test]
fn inverse_round_trip() {
    let fx = Fixture::new();
    let m4 = fx.write("m4.txt", M4);
    let path = m4.to_str().unwrap();
    assert_eq!(
        stdout_of(&["--instance", path, "inverse", "--region", "2,4"]),
        "1 3\n"
    );
    assert_eq!(
        stdout_of(&["--instance", path, "inverse"]),
        "-\t2 4\n2\t1 4\n4\t2 3\n2 4\t1 3\n"
    );
    // an incompatible region is rejected
    let out = extlift(&["--instance", path, "inverse", "--region", "1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a compatible reorientation"));
}

#[test]
fn verify_passes_and_exits_zero() {
    let fx = Fixture::new();
    let m4 = fx.write("m4.txt", M4);
    let out = extlift(&["--instance", m4.to_str().unwrap(), "verify"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS forward-map-bijective"));
    assert!(text.contains("PASS oracle-circuits"));
    assert!(text.contains(", 0 failed"));
}

#[test]
fn verify_rejects_a_corrupted_chirotope() {
    let fx = Fixture::new();
    let bad = fx.write("bad.txt", "chirotope\n4 2\n0+++00\n");
    let out = extlift(&["--instance", bad.to_str().unwrap(), "verify"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL chirotope-axioms"));
    assert!(text.contains("basis exchange fails"));
}

#[test]
fn extlift_output_feeds_back_into_verify() {
    let fx = Fixture::new();
    let m4 = fx.write("m4.txt", M4);
    let emitted = stdout_of(&["--instance", m4.to_str().unwrap(), "extlift"]);
    assert!(emitted.contains("# compliant: true"));
    assert!(emitted.contains("6 3"));
    let mbar = fx.write("mbar.txt", &emitted);
    let out = extlift(&[
        "--instance",
        mbar.to_str().unwrap(),
        "verify",
        "--as-extlift",
    ]);
    assert!(
        out.status.success(),
        "round-trip verify failed: {}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn extend_restricts_to_the_instance() {
    let fx = Fixture::new();
    let u23 = fx.write("u23.txt", "matrix\n2 3\n1 0 1\n0 1 1\nvector 1 2\n");
    let out = stdout_of(&["--instance", u23.to_str().unwrap(), "extend"]);
    assert!(out.contains("4 2"));
    assert!(out.contains("+++--+"));
}

#[test]
fn not_generic_inputs_name_the_witness() {
    let fx = Fixture::new();
    let m4 = fx.write("m4.txt", M4);
    let out = extlift(&[
        "--instance",
        m4.to_str().unwrap(),
        "--vector",
        "1,0",
        "bijection",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cocircuit +3 +4"));

    let out = extlift(&[
        "--instance",
        m4.to_str().unwrap(),
        "--heights",
        "1,2,0,0",
        "bijection",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("circuit +1 -2"));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let fx = Fixture::new();
    let plain = fx.write("plain.txt", "matrix\n2 4\n1 2 0 0\n0 0 1 2\n");
    let path = plain.to_str().unwrap();
    let a = stdout_of(&["--instance", path, "--seed", "9", "bijection"]);
    let b = stdout_of(&["--instance", path, "--seed", "9", "bijection"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 4);
}

#[test]
fn seed_specs_inside_the_instance() {
    let fx = Fixture::new();
    let seeded = fx.write(
        "seeded.txt",
        "matrix\n2 4\n1 2 0 0\n0 0 1 2\nvector seed:3\nheights seed:4\n",
    );
    let out = stdout_of(&["--instance", seeded.to_str().unwrap(), "count"]);
    assert_eq!(out, "bases\t4\ncompatible\t4\nregions\t4\nequal\ttrue\n");
}

#[test]
fn explicit_signature_blocks() {
    let fx = Fixture::new();
    // the M4 pipeline signatures, written out explicitly on an abstract
    // chirotope instance
    let text = "chirotope\n4 2\n0++++0\n\
                extension-signature\n+ : +1 +2\n+ : +3 +4\nend\n\
                lifting-signature\n+ : +1 -2\n+ : +3 -4\nend\n";
    let inst = fx.write("abstract.txt", text);
    let path = inst.to_str().unwrap();
    let rows = stdout_of(&["--instance", path, "bijection"]);
    assert_eq!(
        rows,
        "1 3\t2 4\tg 1 3\ttrue\n\
         1 4\t2\tg 1 4\ttrue\n\
         2 3\t4\tg 2 3\ttrue\n\
         2 4\t-\tg 2 4\ttrue\n"
    );
    // antisymmetry violation (Y and -Y both positive) is rejected
    let bad = fx.write(
        "bad-sig.txt",
        "chirotope\n4 2\n0++++0\n\
         extension-signature\n+ : +1 +2\n+ : -1 -2\n+ : +3 +4\nend\n\
         lifting-signature\n+ : +1 -2\n+ : +3 -4\nend\n",
    );
    let out = extlift(&["--instance", bad.to_str().unwrap(), "bijection"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("antisymmetry"));
}

#[test]
fn json_output_parses() {
    let fx = Fixture::new();
    let m4 = fx.write("m4.txt", M4);
    let path = m4.to_str().unwrap();
    let text = stdout_of(&["--instance", path, "--json", "bijection"]);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["rows"].as_array().unwrap().len(), 4);
    assert_eq!(value["rows"][0]["basis"], serde_json::json!(["1", "3"]));
    assert_eq!(value["rows"][0]["optimal_basis"][0], "g");

    let text = stdout_of(&["--instance", path, "--json", "verify"]);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["passed"], serde_json::json!(true));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let fx = Fixture::new();
    let bad = fx.write("bad.txt", "matrix\n2 4\n1 2 0 x\n0 0 1 2\n");
    let out = extlift(&["--instance", bad.to_str().unwrap(), "bases"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "stderr: {err}");

    let badsign = fx.write("badsign.txt", "chirotope\n4 2\n0++x+0\n");
    let out = extlift(&["--instance", badsign.to_str().unwrap(), "bases"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3") && err.contains("column 4"), "stderr: {err}");
}

#[test]
fn max_n_is_enforced() {
    let fx = Fixture::new();
    let m4 = fx.write("m4.txt", M4);
    let out = extlift(&[
        "--instance",
        m4.to_str().unwrap(),
        "--max-n",
        "3",
        "bases",
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds --max-n"));

    let out = extlift(&[
        "--instance",
        m4.to_str().unwrap(),
        "--max-n",
        "21",
        "bases",
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("hard cap"));
}
