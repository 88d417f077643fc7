use std::fmt::Write as _;
use std::path::Path;
use std::{env, fs};

fn main() {
    let manifest = env::var("CARGO_MANIFEST_DIR").unwrap();
    let table = Path::new(&manifest).join("data/anchors.tsv");
    let source = Path::new(&manifest).join("../../paper.md");
    println!("cargo:rerun-if-changed={}", table.display());
    println!("cargo:rerun-if-changed={}", source.display());

    let text = fs::read_to_string(&table).expect("data/anchors.tsv");
    let paper = fs::read_to_string(&source).ok();
    if paper.is_none() {
        println!("cargo:warning=paper.md not found, anchor quotes not validated");
    }
    let mut out = String::from("pub const ANCHORS: &[(&str, &str, &str)] = &[\n");
    for (n, line) in text.lines().enumerate() {
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [id, label, quote] = fields[..] else {
            panic!("anchors.tsv line {}: expected 3 tab-separated fields", n + 1);
        };
        if let Some(p) = &paper {
            assert!(p.contains(quote), "anchors.tsv line {}: quote for {id} not found verbatim", n + 1);
        }
        writeln!(out, "    ({id:?}, {label:?}, {quote:?}),").unwrap();
    }
    out.push_str("];\n");
    let dest = Path::new(&env::var("OUT_DIR").unwrap()).join("anchors.rs");
    fs::write(dest, out).unwrap();
}
