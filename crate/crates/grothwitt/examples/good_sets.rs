//! Zero sets of ghost sequences and relation localization.
//!
//! The ghost components of a measure evaluated at T = 1 form a linear
//! recurrence sequence, so the set of indices where a polynomial
//! relation between measures vanishes is a finite set plus finitely
//! many full residue classes. `fit_good_set` recovers that description
//! from a window of observed zeros; `localize_irreducible_relation`
//! pins down which irreducible factor of a product relation vanishes
//! on the multiples of a single modulus.

use grothwitt::k0::measure_of_etale;
use grothwitt::skolem::{fit_good_set, ghost_zero_set, localize_irreducible_relation, RelationPoly};
use grothwitt::{Error, Int};

fn main() -> Result<(), Error> {
    // mu(Spec k_2) has ghost components 2, 0, 2, 0, ... at T = 1:
    // the zero set is the odd numbers.
    let m = measure_of_etale(2)?;
    let zeros = ghost_zero_set(&m, 50);
    println!("zero set up to 50: {:?}...", &zeros[..6]);
    let fit = fit_good_set(&zeros, 50)?;
    println!("fitted description: {fit}");
    assert_eq!(fit.modulus, 2);
    assert_eq!(fit.residues, vec![1]);
    assert!(fit.finite.is_empty());
    assert!(fit.contains(1001) && !fit.contains(1002));

    // T_1 (T_1 - 2) vanishes identically on the ghost sequence of that
    // measure; only the factor T_1 - 2 vanishes on a full set of
    // multiples (the even indices, where the ghost equals 2).
    let t1 = RelationPoly::new(1, vec![(vec![1], Int::from(1))])?;
    let t1_minus_2 = RelationPoly::new(
        1,
        vec![(vec![1], Int::from(1)), (vec![0], Int::from(-2))],
    )?;
    println!("\nfactors: {} and {}", t1.render(), t1_minus_2.render());
    let loc = localize_irreducible_relation(&[m], &[t1, t1_minus_2], 60)?;
    println!(
        "factor {} vanishes on all multiples of {}",
        loc.factor, loc.modulus
    );
    assert_eq!((loc.modulus, loc.factor), (2, 1));
    for (i, fitted) in loc.fitted.iter().enumerate() {
        match fitted {
            Some(g) => println!("  zero set of factor {i}: {g}"),
            None => println!("  zero set of factor {i}: no periodic description"),
        }
    }
    Ok(())
}
