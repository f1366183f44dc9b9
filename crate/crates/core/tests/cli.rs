use std::process::Command;

fn quintic(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quintic")).args(args).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap() + &String::from_utf8(out.stderr).unwrap();
    (out.status.code().unwrap(), text)
}

#[test]
fn compare_json_schema() {
    let (code, text) = quintic(&["--output", "json", "compare", "f20r:-3,-3", "f20r:3,0"]);
    assert_eq!(code, 0, "{text}");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["verdict", "table_row", "groups", "dts", "witnesses", "caveats"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["verdict"], "EQUAL");
    assert_eq!(v["table_row"], "I-5");
    assert_eq!(v["groups"][0]["name"], "F20");
}

#[test]
fn text_compare_and_group() {
    let (code, text) = quintic(&["compare", "c5:3,3", "c5:23,3"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("EQUAL (III-2)"), "{text}");
    let (code, text) = quintic(&["group", "d5:-7,1"]);
    assert_eq!(code, 0);
    assert!(text.contains("C5"));
}

#[test]
fn search_line() {
    let (code, text) = quintic(&[
        "search",
        "d5",
        "--fix",
        "0,1",
        "--range",
        "-50:50",
        "--t-fixed",
        "1",
        "--jobs",
        "2",
    ]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("d5:-6,1") && text.contains("d5:41,1"));
    assert!(text.ends_with("4 matches among 101 candidates\n"), "{text}");
}

#[test]
fn resolvent_and_verify() {
    let (code, text) = quintic(&["resolvent", "f2", "d5:5,-1", "d5:0,1"]);
    assert_eq!(code, 0);
    assert!(text.contains("decomposition type: 5,2^2,1"), "{text}");
    let (code, text) = quintic(&["verify", "--seed", "3", "--trials", "10"]);
    assert_eq!(code, 0, "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(quintic(&["compare", "d5:3,0", "d5:0,1"]).0, 2);
    assert_eq!(quintic(&["compare", "d5:x,1", "d5:0,1"]).0, 2);
    assert_eq!(
        quintic(&["search", "d5", "--fix", "0,1", "--range", "-5:5", "--primes", "101,101"]).0,
        2
    );
    assert_eq!(quintic(&["group", "c4:1,1"]).0, 0);
    assert_eq!(quintic(&["--version"]).0, 0);
}
