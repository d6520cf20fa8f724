//! Modules as JSON files, and the command-line front end driven in-process.

use modequiv::cli::{module_to_json, parse_module, run};
use modequiv::families::paper_fixture;
use modequiv::linalg::Fp;

fn main() -> modequiv::Result<()> {
    let (_, ms) = paper_fixture("rdist4", Fp::new(2)?)?;
    let text = module_to_json(&ms[0]);
    println!("{text}");
    assert_eq!(parse_module(&text)?, ms[0]);

    let dir = std::env::temp_dir();
    let path = dir.join("modequiv-example-rdist4.json");
    std::fs::write(&path, &text).expect("temp dir is writable");

    let path = path.to_string_lossy().into_owned();
    let argv = ["modequiv", "check", "iso", path.as_str(), "rdist4.M2", "--report", "structured"];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(argv, &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));
    println!("exit code {code}");

    let bad = r#"{"algebra": {"field": 2, "kind": "rsz", "generators": 1}, "dim": 2, "action": [[[0,1],[1,0]]]}"#;
    println!("invalid module: {}", parse_module(bad).unwrap_err());
    Ok(())
}
