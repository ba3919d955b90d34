// A small census over uniform and graphic matroids, printed as JSON lines.

use conormal::cli::{census_items, census_line, CensusOptions};
use conormal::verify::Theorem;

/// Runs the census and returns whether every identity agreed.
pub fn small_census() -> conormal::Result<bool> {
    let opts = CensusOptions { uniform: Some(4), graphs: Some(4), ..Default::default() };
    let mut all = true;
    for (label, m) in census_items(&opts)? {
        let line = census_line(&label, &m, &Theorem::ALL, &None, false);
        all &= line["agree"] == serde_json::json!(true);
        println!("{label}: beta {} agree {}", line["invariants"]["beta"], line["agree"]);
    }
    Ok(all)
}

pub fn run_example() -> conormal::Result<()> {
    println!("all identities agree: {}", small_census()?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> conormal::Result<()> {
    run_example()
}
