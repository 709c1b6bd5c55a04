use nicecubic::verify::SUITES;

#[test]
fn suite_table_lists_every_suite() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/suites.md");
    let table = std::fs::read_to_string(path).unwrap();
    let rows: Vec<&str> = table.lines().filter(|l| l.starts_with("| `")).collect();
    assert_eq!(rows.len(), SUITES.len());
    for s in SUITES {
        assert!(rows.iter().any(|r| r.starts_with(&format!("| `{}` |", s.name))), "{}", s.name);
    }
}
