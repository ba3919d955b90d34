// Characteristic polynomial, beta invariant, and broken circuit complex of
// the square pyramid graph.

use conormal::corpus;
use conormal::matroid::{is_flawless, is_log_concave, is_unimodal};

pub fn run_example() -> conormal::Result<()> {
    let m = corpus::pyramid();
    println!("ground size {}, rank {}", m.ground_size(), m.full_rank());
    println!("flats: {}, circuits: {}", m.all_flats().len(), m.circuits().len());
    println!("chi(q) coefficients {:?}", m.characteristic_polynomial().coefficients());
    println!("reduced chi(q) coefficients {:?}", m.reduced_characteristic_polynomial().coefficients());
    println!("beta = {} (deletion-contraction: {})", m.beta(), m.beta_deletion_contraction());
    let bc = m.broken_circuit_complex();
    let h = bc.h_vector();
    println!("f(BC) = {:?}, h(BC) = {:?}", bc.f_vector(), h);
    println!(
        "h(BC) unimodal {}, log-concave {}, flawless {}",
        is_unimodal(&h)?,
        is_log_concave(&h)?,
        is_flawless(&h)?
    );
    println!("nbc bases: {}, bnbc bases: {}", m.nbc_bases().len(), m.bnbc_bases().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> conormal::Result<()> {
    run_example()
}
