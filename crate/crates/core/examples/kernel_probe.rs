use groth2_core::groebner::field::{field_groebner, RationalEngine};
use groth2_core::groebner::{ideal_intersect, strong, Budget, PolynomializedRing};
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
    let inter = ideal_intersect(&i_delta, &i_comp, &bnd, &mut budget).unwrap();
    eprintln!("intersection: {} gens, {:.1?}", inter.len(), t0.elapsed());

    let one_minus_di = LaurentPolynomial::parse(&bnd, "1 - del^-1").unwrap();
    let mut kernel = inter;
    for g in &i_delta {
        kernel.push(&one_minus_di * g);
    }

    let ring = PolynomializedRing::new(&bnd);
    let order = ring.grevlex_order();
    let mut polys = Vec::new();
    for g in &kernel {
        polys.push(ring.to_poly(g, &order).unwrap());
    }
    polys.extend(ring.unit_relations(&order));
    eprintln!("kernel gens: {} (sizes: {:?})", polys.len(), polys.iter().map(|p| p.terms.len()).collect::<Vec<_>>());

    let t1 = Instant::now();
    let mut b1 = Budget::new(200_000_000);
    match field_groebner(&RationalEngine, polys.clone(), &order, &mut b1) {
        Ok((basis, lms)) => eprintln!(
            "rational GB: {} elements, {} minimal LMs, {} steps, {:.1?}",
            basis.len(),
            lms.len(),
            b1.used(),
            t1.elapsed()
        ),
        Err(e) => eprintln!("rational GB failed: {e} {:.1?}", t1.elapsed()),
    }

    let t2 = Instant::now();
    let mut b2 = Budget::new(200_000_000);
    match strong::saturate(polys.clone(), &order, &mut b2) {
        Ok(sat) => {
            eprintln!(
                "Z saturation: {} elements, {} steps, {:.1?}; max coeff bits {}",
                sat.len(),
                b2.used(),
                t2.elapsed(),
                sat.iter().flat_map(|p| p.terms.iter().map(|(_, c)| c.bits())).max().unwrap()
            );
            let t3 = Instant::now();
            let mut b3 = Budget::new(200_000_000);
            match strong::reduce_basis(sat, &order, &mut b3) {
                Ok(red) => eprintln!(
                    "Z reduced: {} elements, {} steps, {:.1?}",
                    red.len(),
                    b3.used(),
                    t3.elapsed()
                ),
                Err(e) => eprintln!("Z reduce failed: {e} {:.1?}", t3.elapsed()),
            }
        }
        Err(e) => eprintln!("Z saturation failed: {e} {:.1?}", t2.elapsed()),
    }
    eprintln!("total {:.1?}", t0.elapsed());
}
