//! Writes the nodes of a cubature rule as CSV, JSON and SVG.
//!
//! Usage: `cargo run --example node_export -- [ALGEBRA] [M] [DIR]`

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use weylcub::cubature::build_rule;
use weylcub::export::{write_nodes_csv, write_nodes_json, write_nodes_svg};
use weylcub::liealg::{build_algebra, AlgebraLabel};

fn main() -> weylcub::Result<()> {
    let mut args = std::env::args().skip(1);
    let label: AlgebraLabel = args.next().as_deref().unwrap_or("C2").parse()?;
    let m: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(15);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| ".".into()));

    let d = build_algebra(label);
    let rule = build_rule(&d, m)?;
    let stem = format!("nodes_{label}_M{m}");
    write_nodes_csv(&rule, BufWriter::new(File::create(dir.join(format!("{stem}.csv")))?))?;
    write_nodes_json(&rule, BufWriter::new(File::create(dir.join(format!("{stem}.json")))?))?;
    write_nodes_svg(&d, &rule, BufWriter::new(File::create(dir.join(format!("{stem}.svg")))?))?;
    println!(
        "{label} M={m}: {} nodes, prefactor {:.6e}, files {}/{stem}.{{csv,json,svg}}",
        rule.len(),
        rule.prefactor,
        dir.display()
    );
    Ok(())
}
