// Poincaré duality, hard Lefschetz, and Hodge–Riemann on small conormal and
// Bergman fans, using the restricted support function as the Lefschetz class.

use conormal::conormal::{Bergman, Conormal};
use conormal::hodge::lefschetz_report;
use conormal::Matroid;

pub fn run_example() -> conormal::Result<()> {
    for (r, n) in [(2, 3), (2, 4), (3, 4)] {
        let m = Matroid::uniform(r, n)?;
        let cn = Conormal::new(&m)?;
        let report = lefschetz_report(cn.fan(), &cn.support_function(), 1)?;
        println!(
            "conormal U({r},{n}): betti {:?}, top degree {}, all hold {}",
            report.betti,
            report.top_degree,
            report.all_hold()
        );
    }
    for (r, n) in [(2, 3), (2, 4)] {
        let b = Bergman::new(&Matroid::uniform(r, n)?)?;
        let report = lefschetz_report(&b.fan, &b.support_function(), 1)?;
        println!("bergman U({r},{n}): betti {:?}, top degree {}, all hold {}", report.betti, report.top_degree, report.all_hold());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> conormal::Result<()> {
    run_example()
}
