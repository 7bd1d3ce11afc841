use groth2_core::groebner::{ideal_intersect, Budget};
use groth2_core::moduli::boundary_ideal_generators;
use groth2_core::{Alphabet, LaurentPolynomial};
use std::time::Instant;

fn main() {
    let bnd = Alphabet::boundary();
    let i_delta = boundary_ideal_generators();
    let s10 = groth2_core::pushforward::pushforward_on_moduli_chart(3, 1, 6, 0).unwrap().into_polynomial();
    let s11 = groth2_core::pushforward::pushforward_on_moduli_chart(3, 1, 6, 1).unwrap().into_polynomial();
    let s20 = groth2_core::pushforward::pushforward_on_moduli_chart(3, 2, 6, 0).unwrap().into_polynomial();
    let i_comp: Vec<LaurentPolynomial> = [s10, s11, s20]
        .iter()
        .map(|f| f.rename(&bnd, &[("e1", "eps"), ("e2", "lam")]).unwrap())
        .collect();

    let t0 = Instant::now();
    let mut budget = Budget::new(100_000_000);
    match ideal_intersect(&i_delta, &i_comp, &bnd, &mut budget) {
        Ok(inter) => {
            eprintln!(
                "intersection: {} generators, {} steps, {:.1?}",
                inter.len(),
                budget.used(),
                t0.elapsed()
            );
            let one_minus_di = LaurentPolynomial::parse(&bnd, "1 - del^-1").unwrap();
            let mut kernel = inter;
            for g in &i_delta {
                kernel.push(&one_minus_di * g);
            }
            let t1 = Instant::now();
            let mut budget2 = Budget::new(100_000_000);
            match groth2_core::groebner::quotient_report(
                &kernel,
                &bnd,
                &[2, 3, 5, 7, 11, 13],
                None,
                &mut budget2,
            ) {
                Ok(report) => {
                    eprintln!(
                        "kernel report: rank_q = {}, free = {}, lc bound = {}, {} steps, {:.1?}",
                        report.rank_q,
                        report.free,
                        report.leading_coeff_bound,
                        budget2.used(),
                        t1.elapsed()
                    );
                    eprintln!("rank_mod_p: {:?}", report.rank_mod_p);
                }
                Err(e) => eprintln!("kernel report failed: {e} after {:.1?}", t1.elapsed()),
            }
        }
        Err(e) => eprintln!("intersection failed: {e} after {:.1?}", t0.elapsed()),
    }
    eprintln!("total {:.1?}", t0.elapsed());
}
