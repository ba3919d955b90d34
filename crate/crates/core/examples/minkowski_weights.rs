// Tropical intersection on the conormal fan of `U_{2,4}`: capping the
// fundamental weight with `γ` and `δ` and reading off mixed degrees.

use conormal::conormal::Conormal;
use conormal::weights::{cap, degree, is_balanced, MinkowskiWeight};
use conormal::Matroid;

pub fn run_example() -> conormal::Result<()> {
    let m = Matroid::uniform(2, 4)?;
    let cn = Conormal::new(&m)?;
    let fan = cn.fan();
    println!("conormal fan: dimension {}, {} rays, unimodular {}", fan.dim(), fan.rays().len(), fan.is_unimodular());
    let one = MinkowskiWeight::fundamental(fan);
    println!("fundamental weight balanced: {}", is_balanced(fan, &one)?);
    let capped = cap(fan, &cn.delta(0), &one)?;
    println!("delta cap [fan] has dimension {} and is balanced: {}", capped.k, is_balanced(fan, &capped)?);
    let (gamma, delta) = (cn.gamma(0), cn.delta(0));
    let n1 = cn.dim();
    for k in 0..=n1 {
        let mut classes = vec![gamma.clone(); k];
        classes.extend(std::iter::repeat_n(delta.clone(), n1 - k));
        println!("deg(gamma^{k} delta^{}) = {}", n1 - k, degree(fan, &classes, &one)?);
    }
    println!("gamma/delta degrees: {:?}", cn.gamma_delta_degrees()?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> conormal::Result<()> {
    run_example()
}
