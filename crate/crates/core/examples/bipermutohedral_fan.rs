// Rays and chambers of the bipermutohedral fan, the bisequence/biflag
// correspondence, and a vertex of the bipermutohedron.

use conormal::bipermutohedral::{
    biflag_of_bisequence, bipermutohedron_vertex, bisequence_of_biflag, count_chambers, enumerate_bipermutations,
    enumerate_bisubsets, vertex_satisfies_inequalities, Bisequence,
};

pub fn run_example() -> conormal::Result<()> {
    for g in 2..=4 {
        println!("|E| = {g}: {} rays, {} chambers", enumerate_bisubsets(g).len(), count_chambers(g));
    }
    let mut round_trips = 0;
    for b in enumerate_bipermutations(3) {
        let f = biflag_of_bisequence(&b);
        assert_eq!(bisequence_of_biflag(&f)?, b);
        round_trips += 1;
    }
    println!("{round_trips} maximal bisequences on 3 elements round-trip through biflags");
    let b = Bisequence::parse(4, "1|2|3|1|3|0|0")?;
    println!("biflag of 1|2|3|1|3|0|0: {}", biflag_of_bisequence(&b));
    let v = bipermutohedron_vertex(&b)?;
    println!("vertex x = {:?}, y = {:?}, satisfies all facet inequalities: {}", v.x, v.y, vertex_satisfies_inequalities(&v));
    Ok(())
}

#[allow(dead_code)]
fn main() -> conormal::Result<()> {
    run_example()
}
