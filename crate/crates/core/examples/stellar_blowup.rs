// Stellar subdivision of a product of Bergman fans along a 2-dimensional
// cone, checking `b_i(blowup) = b_i(fan) + b_{i-1}(star)`.

use conormal::conormal::Bergman;
use conormal::hodge::{star_fan, stellar_subdivision, GradedChow};
use conormal::weights::product;
use conormal::Matroid;

/// Betti numbers of the fan, its subdivision, and the star of the cone.
pub fn blowup_betti() -> conormal::Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let b = Bergman::new(&Matroid::uniform(2, 3)?)?;
    let fan = product(&b.fan, &b.fan);
    let sigma: Vec<usize> = fan.cones(2)[0].iter().map(|&i| i as usize).collect();
    let blown = stellar_subdivision(&fan, &sigma)?;
    let star = star_fan(&fan, &sigma)?;
    Ok((
        GradedChow::new(&fan)?.betti_numbers(),
        GradedChow::new(&blown)?.betti_numbers(),
        GradedChow::new(&star)?.betti_numbers(),
    ))
}

pub fn run_example() -> conormal::Result<()> {
    let (before, after, star) = blowup_betti()?;
    println!("betti before {before:?}, after {after:?}, star {star:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> conormal::Result<()> {
    run_example()
}
