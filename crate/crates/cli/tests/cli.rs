//! End-to-end tests of the binary: frozen outputs for the shipped fixtures,
//! exit-code contracts, batch ordering, and byte-determinism of JSON.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures")).join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jumploci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn twisted_table_output() {
    let group = fixture("f2.grp");
    let text = stdout_of(&["twisted", "--group", group.to_str().unwrap(), "--char", "1/2,1/3"]);
    assert_eq!(
        "group f2\ncharacter 1/2,1/3\norder 6\nmodel presentation-2-complex\nh0 0\nh1 1\n",
        text
    );
}

#[test]
fn twisted_json_output() {
    let group = fixture("t2.grp");
    let text = stdout_of(&[
        "twisted",
        "--group",
        group.to_str().unwrap(),
        "--char",
        "1/2,0",
        "--k",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(
        "{\"character\":\"1/2,0\",\"group\":\"t2\",\"h0\":0,\"h1\":0,\"k\":1,\"member\":false,\"model\":\"presentation-2-complex\",\"order\":2}\n",
        text
    );
}

#[test]
fn jump_json_is_frozen_and_deterministic() {
    let group = fixture("xy2.grp");
    let torus = fixture("xy2-diag.trs");
    let args = [
        "jump",
        "--group",
        group.to_str().unwrap(),
        "--torus",
        torus.to_str().unwrap(),
        "--format",
        "json",
    ];
    let first = stdout_of(&args);
    assert_eq!(
        "{\"generic_h1_dim\":0,\"generic_rank\":1,\"group\":\"xy2\",\"non_torsion_factor\":null,\
         \"points\":[{\"h1_dim\":2,\"order\":1,\"param\":\"0\"},{\"h1_dim\":1,\"order\":2,\"param\":\"1/2\"}],\
         \"torus\":\"xy2-diag\",\"trivial_char_params\":[\"0\"]}\n",
        first
    );
    assert_eq!(first, stdout_of(&args), "identical inputs, identical bytes");
}

#[test]
fn translated_subtorus_reports_no_jumps() {
    let group = fixture("t2.grp");
    let torus = fixture("t2-sub-neg.trs");
    let text = stdout_of(&[
        "jump",
        "--group",
        group.to_str().unwrap(),
        "--torus",
        torus.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(text.contains("\"points\":[]"), "got {text}");
    assert!(text.contains("\"trivial_char_params\":[]"), "got {text}");
}

#[test]
fn generic_dimension_along_shipped_specs() {
    let group = fixture("genus2.grp");
    let torus = fixture("genus2-full.trs");
    let text = stdout_of(&[
        "generic",
        "--group",
        group.to_str().unwrap(),
        "--torus",
        torus.to_str().unwrap(),
    ]);
    assert!(text.contains("generic_h1_dim 2"), "got {text}");

    let group = fixture("xy2.grp");
    let torus = fixture("xy2-trans.trs");
    let text = stdout_of(&[
        "generic",
        "--group",
        group.to_str().unwrap(),
        "--torus",
        torus.to_str().unwrap(),
    ]);
    assert!(
        text.contains("generic_h1_dim 1"),
        "translated component dimension, got {text}"
    );
}

#[test]
fn curve_table_and_degenerate_case() {
    let text = stdout_of(&["curve", "--genus", "1", "--punctures", "1"]);
    assert!(text.contains("dim_w 2"), "got {text}");
    assert!(text.contains("generic_dim 1"), "got {text}");

    let text = stdout_of(&["curve", "--genus", "2", "--proper", "--format", "json"]);
    assert!(text.contains("\"dim_w\":4"), "got {text}");
    assert!(text.contains("\"generic_dim\":2"), "got {text}");

    let text = stdout_of(&["curve", "--genus", "0", "--punctures", "1", "--format", "json"]);
    assert!(text.contains("\"dim_w\":null"), "degenerate curve, got {text}");
}

#[test]
fn aomoto_and_symmetry_outputs() {
    let group = fixture("genus2.grp");
    let text = stdout_of(&[
        "aomoto",
        "--group",
        group.to_str().unwrap(),
        "--alpha",
        "1,0,0,0",
        "--format",
        "json",
    ]);
    assert!(text.contains("\"dim\":2"), "got {text}");

    let text = stdout_of(&[
        "symmetry",
        "--group",
        group.to_str().unwrap(),
        "--char",
        "1/3,0,0,0",
        "--format",
        "json",
    ]);
    assert!(text.contains("\"equal\":true"), "got {text}");
    assert!(text.contains("\"inverse\":\"2/3,0,0,0\""), "got {text}");
}

#[test]
fn admissible_and_lifts_outputs() {
    let group = fixture("f2.grp");
    let text = stdout_of(&[
        "admissible",
        "--group",
        group.to_str().unwrap(),
        "--char",
        "1/2,1/3",
        "--box",
        "0",
        "--format",
        "json",
    ]);
    assert!(text.contains("\"admissible\":true"), "got {text}");
    assert!(text.contains("\"witness\":\"1/2,1/3\""), "got {text}");

    let text = stdout_of(&[
        "lifts",
        "--group",
        group.to_str().unwrap(),
        "--char",
        "1/2,1/3",
        "--box",
        "1",
        "--format",
        "json",
    ]);
    assert!(text.contains("\"count\":9"), "got {text}");
    assert!(
        text.contains("\"lifts\":[\"1/2,1/3\","),
        "zero offset first, got {text}"
    );
}

#[test]
fn batch_mode_preserves_input_order() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "1/5,0\n# a comment line\n0,1/7\n\n1/2,1/2").unwrap();
    let group = fixture("f2.grp");
    let text = stdout_of(&[
        "twisted",
        "--group",
        group.to_str().unwrap(),
        "--chars",
        file.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    let i1 = text.find("1/5,0").expect("first character present");
    let i2 = text.find("0,1/7").expect("second character present");
    let i3 = text.find("1/2,1/2").expect("third character present");
    assert!(i1 < i2 && i2 < i3, "output follows input order: {text}");
}

#[test]
fn input_errors_exit_two() {
    let group = fixture("f2.grp");
    let out = run(&["twisted", "--group", group.to_str().unwrap(), "--char", "nope"]);
    assert_eq!(2, exit_code(&out));

    let out = run(&["twisted", "--group", "no-such-file.grp", "--char", "0,0"]);
    assert_eq!(2, exit_code(&out));

    // Wrong arity for the group.
    let out = run(&["twisted", "--group", group.to_str().unwrap(), "--char", "1/2"]);
    assert_eq!(2, exit_code(&out));

    // A spec whose monomials leave the character variety.
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, "torus bad\nparams 1\ntranslate 0\nrow 1\n").unwrap();
    let c2 = fixture("xy2.grp");
    let out = run(&[
        "jump",
        "--group",
        c2.to_str().unwrap(),
        "--torus",
        bad.path().to_str().unwrap(),
    ]);
    assert_eq!(2, exit_code(&out));
}

#[test]
fn size_limits_exit_three() {
    let mut big = tempfile::NamedTempFile::new().unwrap();
    let gens: Vec<String> = (0..17).map(|i| format!("g{i}")).collect();
    write!(big, "group big\ngens {}\n", gens.join(" ")).unwrap();
    let out = run(&["twisted", "--group", big.path().to_str().unwrap(), "--char", "0"]);
    assert_eq!(3, exit_code(&out));
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("size limit"),
        "clear message expected"
    );
}

#[test]
fn flag_conflicts_are_rejected() {
    let group = fixture("f2.grp");
    let out = run(&[
        "twisted",
        "--group",
        group.to_str().unwrap(),
        "--char",
        "0,0",
        "--chars",
        "also.txt",
    ]);
    assert_eq!(2, exit_code(&out));

    let out = run(&["curve", "--genus", "1", "--punctures", "2", "--proper"]);
    assert_eq!(2, exit_code(&out));
}

#[test]
fn shipped_corpus_round_trips() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        match path.extension().and_then(|e| e.to_str()) {
            Some("grp") => {
                let p = jumploci_core::Presentation::parse(&text).unwrap();
                let p2 = jumploci_core::Presentation::parse(&p.emit()).unwrap();
                assert_eq!(p.emit(), p2.emit(), "{}", path.display());
                seen += 1;
            }
            Some("trs") => {
                let w = jumploci_core::TorusSpec::parse(&text).unwrap();
                let w2 = jumploci_core::TorusSpec::parse(&w.emit()).unwrap();
                assert_eq!(w, w2, "{}", path.display());
                seen += 1;
            }
            _ => {}
        }
    }
    assert_eq!(15, seen, "corpus files all covered");
}
