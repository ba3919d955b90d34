// Expand `δ^m` on the conormal fan of the square pyramid graph and list the
// terms of the top power, which are the cones of the bnbc bases.

use conormal::bipermutohedral::Biflag;
use conormal::bits;
use conormal::conormal::Conormal;
use conormal::corpus;

/// Sizes and distinct counts of the expansions of `δ^0, .., δ^{n-1}`, plus
/// the labels of the bnbc bases whose cones make up the top power.
pub fn expansion_summary() -> conormal::Result<(Vec<u64>, Vec<usize>, Vec<String>)> {
    let m = corpus::pyramid();
    let cn = Conormal::new(&m)?;
    let empty = Biflag::new(m.ground_size(), vec![])?;
    let levels = cn.expansion_levels(&empty, cn.dim())?;
    let sizes = levels.iter().map(|l| l.size()).collect();
    let distinct = levels.iter().map(|l| l.distinct()).collect();
    let top = levels.last().expect("nonempty");
    let mut bases = Vec::new();
    for b in m.bnbc_bases() {
        let cone = cn.beta_cone(b)?;
        if top.terms.get(&cone) == Some(&1) {
            bases.push(bits::label(b));
        }
    }
    Ok((sizes, distinct, bases))
}

pub fn run_example() -> conormal::Result<()> {
    let (sizes, distinct, bases) = expansion_summary()?;
    println!("terms with multiplicity: {sizes:?}");
    println!("distinct terms:          {distinct:?}");
    println!("top power is the sum of the cones of bnbc bases {bases:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> conormal::Result<()> {
    run_example()
}
