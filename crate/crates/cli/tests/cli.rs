use std::io::Write;
use std::process::{Command, Stdio};

use tamil_stem_cli::{
    run_args, Outcome, EXIT_CONFLICTS, EXIT_DATA, EXIT_NO_INPUT, EXIT_OK, EXIT_USAGE,
};

fn run(args: &[&str], stdin: &str) -> Outcome {
    run_args(
        std::iter::once("tamilstem").chain(args.iter().copied()),
        stdin.as_bytes(),
    )
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn stem_prints_word_and_stem() {
    let out = run(&["stem"], "பெண்கள்\n");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "பெண்கள்\tபெண்\n");
}

#[test]
fn stem_both_algorithms() {
    let input = "படித்தேன்\nமரங்களுக்கு\nஓடிய\n";
    for algo in ["light", "strip"] {
        let out = run(&["stem", "--algo", algo], input);
        assert_eq!(
            out.stdout, "படித்தேன்\tபடி\nமரங்களுக்கு\tமரம்\nஓடிய\tஓடு\n",
            "{algo}"
        );
    }
}

#[test]
fn empty_stdin_is_empty_output() {
    let out = run(&["stem"], "");
    assert_eq!(
        out,
        Outcome {
            stdout: String::new(),
            stderr: String::new(),
            code: EXIT_OK
        }
    );
}

#[test]
fn one_output_line_per_input_line() {
    let input = "பெண்கள்\n\nstemming\nமரம்\n\n";
    let out = run(&["stem"], input);
    assert_eq!(out.stdout.lines().count(), input.lines().count());
    assert!(out.stdout.contains("stemming\tstemming\n"));
}

#[test]
fn decomposed_input_is_normalized() {
    let out = run(&["stem"], "க\u{0BC6}\u{0BBE}டுத்தேன்\n");
    assert_eq!(out.stdout, "கொடுத்தேன்\tகொடு\n");
}

#[test]
fn trace_lines_follow_each_word() {
    let out = run(&["stem", "--algo", "strip", "--trace"], "மரங்களுக்கு\n");
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "மரங்களுக்கு\tமரம்");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("#\t0\tCase"));
    assert!(lines[1].ends_with("\tமரங்களுக்கு\tமரங்கள்"));
    assert!(lines[2].ends_with("\tமரங்கள்\tமரம்"));
}

#[test]
fn generate_then_eval_scores_full_marks() {
    let gold = run(&["generate", "--paradigm", "verb"], "படி\n");
    assert_eq!(gold.code, EXIT_OK);
    let out = run(&["eval", "--algo", "light"], &gold.stdout);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.ends_with("accuracy\t100.0\n"), "{}", out.stdout);
}

#[test]
fn eval_reports_counts() {
    let out = run(&["eval"], "பெண்கள்\tபெண்\nபெண்கள்\tபெண்\nகணக்குகள்\tகணக்கு\n");
    assert_eq!(out.stdout, "n_unique\t2\nn_correct\t1\naccuracy\t50.0\n");
}

#[test]
fn eval_warns_on_conflicting_gold() {
    let out = run(&["eval"], "பெண்கள்\tபெண்\nபெண்கள்\tபெ\n");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stderr.starts_with("warning:"), "{}", out.stderr);
}

#[test]
fn compare_csv_from_file() {
    let gold = run(&["generate", "--paradigm", "noun"], "மரம்\nபெண்\n").stdout;
    let f = temp_file(&gold);
    let path = f.path().to_str().unwrap();
    let out = run(
        &[
            "compare", "--gold", path, "--chunks", "17,35", "--format", "csv",
        ],
        "",
    );
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(
        out.stdout,
        "n_words,n_unique,correct_strip,acc_strip,correct_light,acc_light\n\
         17,17,17,100.0,17,100.0\n\
         35,35,35,100.0,35,100.0\n\
         avg,,,100.0,,100.0\n"
    );
}

#[test]
fn compare_json_and_table() {
    let gold = "பெண்கள்\tபெண்\n";
    let json = run(&["compare", "--format", "json"], gold);
    assert!(json.stdout.contains("\"correct_light\": 1"));
    let table = run(&["compare"], gold);
    assert!(table.stdout.contains("average"));
}

#[test]
fn compare_rejects_bad_chunks() {
    let out = run(&["compare", "--chunks", "2,1"], "பெண்கள்\tபெண்\nமரம்\tமரம்\n");
    assert_eq!(out.code, EXIT_DATA);
    let out = run(&["compare", "--chunks", "5"], "பெண்கள்\tபெண்\n");
    assert_eq!(out.code, EXIT_DATA);
}

#[test]
fn builtin_rules_validate() {
    let out = run(&["rules-validate"], "");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains(": ok, "));
}

#[test]
fn duplicate_rule_is_a_conflict() {
    let f = temp_file("Plural\tகள்\t\t2\t\nCase\tக்கு\t\t2\tPlural\nPlural\tகள்\t\t1\t\n");
    let out = run(
        &["rules-validate", "--rules", f.path().to_str().unwrap()],
        "",
    );
    assert_eq!(out.code, EXIT_CONFLICTS);
    assert!(out.stdout.contains("line 3"), "{}", out.stdout);
}

#[test]
fn malformed_rule_file_is_a_data_error() {
    let f = temp_file("Plural\tகள்\n");
    let path = f.path().to_str().unwrap();
    assert_eq!(
        run(&["rules-validate", "--rules", path], "").code,
        EXIT_DATA
    );
    assert_eq!(run(&["stem", "--rules", path], "பெண்கள்\n").code, EXIT_DATA);
}

#[test]
fn custom_rules_are_used() {
    let f = temp_file("Plural\tgaL\t\t2\t\nPersonNumberGender\tththEn\t\t2\t\n");
    let out = run(
        &[
            "stem",
            "--algo",
            "strip",
            "--rules",
            f.path().to_str().unwrap(),
        ],
        "padiththEn\n",
    );
    assert_eq!(out.stdout, "padiththEn\tpadi\n");
}

#[test]
fn missing_file_is_no_input() {
    assert_eq!(
        run(&["stem", "--rules", "/nonexistent/rules"], "").code,
        EXIT_NO_INPUT
    );
    assert_eq!(
        run(&["eval", "--gold", "/nonexistent/gold"], "").code,
        EXIT_NO_INPUT
    );
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["--bogus"], "").code, EXIT_USAGE);
    assert_eq!(run(&[], "").code, EXIT_USAGE);
    assert_eq!(run(&["generate"], "").code, EXIT_USAGE);
}

#[test]
fn data_errors() {
    assert_eq!(run(&["eval"], "only-one-field\n").code, EXIT_DATA);
    assert_eq!(run(&["eval"], "").code, EXIT_DATA);
    assert_eq!(
        run(&["generate", "--paradigm", "verb"], "படி\nகேள்\n").code,
        EXIT_DATA
    );
    let bad = run_args(["tamilstem", "stem"], b"\xff\xfe");
    assert_eq!(bad.code, EXIT_DATA);
}

#[test]
fn output_is_deterministic() {
    let gold = run(&["generate", "--paradigm", "noun"], "மரம்\nகிளி\nபெண்\n").stdout;
    let a = run(
        &["compare", "--format", "json", "--chunks", "10,30,53"],
        &gold,
    );
    let b = run(
        &["compare", "--format", "json", "--chunks", "10,30,53"],
        &gold,
    );
    assert_eq!(a, b);
}

#[test]
fn binary_pipes_stdin_and_sets_exit_code() {
    let exe = env!("CARGO_BIN_EXE_tamilstem");
    let mut child = Command::new(exe)
        .arg("stem")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all("பெண்கள்\n".as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "பெண்கள்\tபெண்\n");

    let status = Command::new(exe)
        .args(["rules-validate", "--rules", "/nonexistent/rules"])
        .stdin(Stdio::null())
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_NO_INPUT));
}
