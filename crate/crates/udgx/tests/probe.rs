// temporary probe test
use std::time::Instant;
use udgx::harness::gen::{gen_convex, random_weights};
use udgx::indep::{solve_mwis_capped, MwisTable};

#[test]
fn probe_mwis_scaling() {
    for n in [150usize, 300] {
        let inst = gen_convex(n, 9_002, 3.0)
            .unwrap()
            .with_weights(random_weights(n, 9_003, true))
            .unwrap();
        let t0 = Instant::now();
        let table = MwisTable::build(&inst, *inst.r_sq(), true, inst.weights().to_vec(), n).unwrap();
        let build = t0.elapsed();
        let mut entries = 0usize;
        for i in 0..n as u32 {
            for j in 0..n as u32 {
                if let Some(m) = table.members_of(i, j) {
                    entries += m.len();
                }
            }
        }
        drop(table);
        let t1 = Instant::now();
        let _ = solve_mwis_capped(&inst, n).unwrap();
        let solve = t1.elapsed();
        println!("n={n}: build={build:?} solve={solve:?} entries={entries}");
    }
}
