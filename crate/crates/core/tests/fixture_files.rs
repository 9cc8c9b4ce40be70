//! The JSON files under `fixtures/` must match the built-in fixtures byte for
//! byte. Set `MALCEV_REGENERATE_FIXTURES=1` to rewrite them.

use std::path::PathBuf;

use malcev_core::fixtures::{self, Fixture, NAMES};
use malcev_core::io;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn path(name: &str, f: &Fixture) -> PathBuf {
    dir().join(format!("{name}.{}.json", f.suffix()))
}

#[test]
fn files_match_builtins() {
    let regenerate = std::env::var("MALCEV_REGENERATE_FIXTURES").is_ok_and(|v| v == "1");
    for name in NAMES {
        let f = fixtures::lookup(name).unwrap();
        let expected = io::to_canonical_string(&io::fixture_to_json(&f));
        let p = path(name, &f);
        if regenerate {
            std::fs::create_dir_all(dir()).unwrap();
            std::fs::write(&p, &expected).unwrap();
        }
        let actual = std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(actual, expected, "{} is stale; regenerate with MALCEV_REGENERATE_FIXTURES=1", p.display());
    }
}

#[test]
fn files_load_back_to_builtins() {
    for name in NAMES {
        let f = fixtures::lookup(name).unwrap();
        let p = path(name, &f);
        let v = io::read_json(&p).unwrap();
        let loaded = io::fixture_from_json(&v, "$", &f).unwrap();
        let again = io::to_canonical_string(&io::fixture_to_json(&loaded));
        assert_eq!(again, std::fs::read_to_string(&p).unwrap(), "{name}");
    }
}

#[test]
fn example2_1_file_is_the_expected_table() {
    let v = io::read_json(&dir().join("example2_1.alg.json")).unwrap();
    let a = io::algebra_from_json(&v, "$").unwrap();
    assert_eq!(a, fixtures::example2_1());
    assert_eq!(a.render_products(), fixtures::example2_1().render_products());
}
