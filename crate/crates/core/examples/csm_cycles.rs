// CSM cycles of `U_{2,4}` computed three ways: from interval betas, as fiber
// sums of conormal degrees, and as pushforwards of capped conormal weights.

use conormal::conormal::{csm_cycle, csm_via_fiber_sum, csm_via_pushforward, Bergman};
use conormal::weights::is_balanced;
use conormal::Matroid;

pub fn run_example() -> conormal::Result<()> {
    let m = Matroid::uniform(2, 4)?;
    let bergman = Bergman::new(&m)?;
    for k in 0..m.full_rank() {
        let direct = csm_cycle(&m, k)?;
        let fibers = csm_via_fiber_sum(&m, k)?;
        let pushed = csm_via_pushforward(&m, k)?;
        let balanced = is_balanced(&bergman.fan, &direct.to_minkowski(&bergman)?)?;
        let weights: Vec<i64> = direct.weights.values().copied().collect();
        println!(
            "csm_{k}: weights {weights:?}, fiber sums agree {}, pushforward agrees {}, balanced {balanced}",
            direct == fibers,
            direct == pushed
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> conormal::Result<()> {
    run_example()
}
