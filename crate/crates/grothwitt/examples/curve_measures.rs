//! From point counts of a curve to its motivic measure.
//!
//! A smooth projective curve of genus g over GF(q) is pinned down by
//! its counts over the first 2g extensions: the weight-1 numerator
//! P(t) = prod (1 - alpha_i t) falls out of the exact Newton relations,
//! and the measure mu = (1 - t) + [1/P] T + (1 - qt) T^2 remembers all
//! counts through its ghost components evaluated at T = 1.

use grothwitt::field::FieldSpec;
use grothwitt::zeta::{artin_schreier_curve, Curve};
use grothwitt::{Error, Int, Rat};

fn main() -> Result<(), Error> {
    // The projective line over F_2: genus 0, so the measure is just
    // (1 - t) + (1 - 2t) T^2.
    let line = Curve::projective_line(FieldSpec::new(2, 1, 0)?);
    let lz = line.zeta(4, 1_000_000)?;
    println!("P^1 / F_2 counts: {:?}", lz.counts_to(4));
    let lm = lz.motivic_measure();
    for nu in 1..=4 {
        assert_eq!(
            lm.ghost_at_one(nu),
            Rat::from_integer(lz.counts_to(4)[nu - 1].clone())
        );
    }
    println!("measure ghosts at T=1 reproduce the counts exactly\n");

    // y^2 - y = x^3 over F_4, the supersingular genus-1 curve whose
    // Frobenius eigenvalues are -2, -2.
    let curve = artin_schreier_curve(2, 2)?;
    let z = curve.zeta(2, 1_000_000)?;
    println!("y^2 - y = x^3 / F_4 counts: {:?}", z.counts_to(2));
    println!(
        "numerator tail (t^1, t^2 coefficients): {:?}",
        z.numerator()
            .tail_coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );
    assert_eq!(z.counts_to(2), vec![Int::from(9), Int::from(9)]);

    let m = z.motivic_measure();
    for nu in 1..=6 {
        let predicted = m.ghost_at_one(nu);
        println!("  N_{nu} from the measure: {predicted}");
    }

    // Base change to F_16 squares the eigenvalues: the numerator turns
    // into (1 - 4t)^2 and the curve becomes special.
    let z2 = z.base_change(2)?;
    println!(
        "\nafter base change to F_16, numerator tail: {:?}",
        z2.numerator()
            .tail_coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );

    // Restriction of scalars goes the other way: V_2 spreads the
    // F_4-measure into an F_2-measure whose even ghosts repeat the
    // original counts.
    let res = z.restrict_scalars(2)?;
    for nu in 1..=4 {
        let g = res.ghost_at_one(nu);
        let expected = if nu % 2 == 0 {
            Rat::from_integer(2.into()) * m.ghost_at_one(nu / 2)
        } else {
            Rat::from_integer(0.into())
        };
        assert_eq!(g, expected);
    }
    println!("restriction of scalars: ghosts vanish at odd indices, double at even ones");
    Ok(())
}
