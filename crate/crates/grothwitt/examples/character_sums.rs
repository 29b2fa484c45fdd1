//! Jacobi sums as Frobenius eigenvalues, with certified numerics.
//!
//! The curve y^p - y = x^(p^a - 1) over GF(p^a) has Frobenius
//! eigenvalues given by Jacobi character sums. Their p-adic sizes come
//! for free from base-p digit sums (the Stickelberger valuation), and
//! their complex values are evaluated with explicit error bounds, so
//! every comparison below carries a proven tolerance.

use grothwitt::dh::{digit_sum, jacobi_sum, phi_threshold, stickelberger_valuation, valuation_matrix};
use grothwitt::poly::{inverse_roots, rat_to_f64};
use grothwitt::zeta::artin_schreier_curve;
use grothwitt::Error;

fn main() -> Result<(), Error> {
    // sigma(t) is the base-p digit sum of t reduced mod p^a - 1; the
    // valuation of the Jacobi sum at the prime over p is sigma / (p-1),
    // here in units of a full power q = p^a.
    println!("digit sums for p = 3, a = 2 (q = 9):");
    for t in 1..=7 {
        println!(
            "  sigma({t}) = {}, valuation {}",
            digit_sum(t, 3, 2)?,
            stickelberger_valuation(t, 3, 2)?
        );
    }

    // The exact norm of the sum tau(chi^t psi^j): always a power of q.
    let tau = jacobi_sum(3, 1, 1, 1, 1_000_000)?;
    let norm = tau.norm_exact()?;
    println!("\n|tau|^2 over GF(3): {}", norm[0]);

    // Certified complex evaluation: value with an explicit error bound.
    let (re, im) = tau.evaluate(96);
    println!(
        "tau = {:.12} + {:.12} i  (error bounds {:.2e}, {:.2e})",
        rat_to_f64(&re.value),
        rat_to_f64(&im.value),
        rat_to_f64(&re.err),
        rat_to_f64(&im.err)
    );

    // Cross check: the two sums for p = 2, a = 2 are the Frobenius
    // eigenvalues of y^2 - y = x^3 over F_4, computed independently by
    // point counting.
    let z = artin_schreier_curve(2, 2)?.zeta(2, 1_000_000)?;
    let roots = inverse_roots(&z.numerator().full_coeffs())?;
    println!("\neigenvalues of y^2 - y = x^3 / F_4 from point counts:");
    for r in &roots {
        println!("  {:.6} + {:.6} i", r.re, r.im);
    }
    for t in 1..=2 {
        let (re, im) = jacobi_sum(2, 2, t, 1, 1_000_000)?.evaluate(64);
        let (x, y) = (rat_to_f64(&re.value), rat_to_f64(&im.value));
        println!("character sum t = {t}: {x:.6} + {y:.6} i");
        assert!(roots
            .iter()
            .any(|r| ((r.re - x).powi(2) + (r.im - y).powi(2)).sqrt() < 1e-6));
    }
    println!("each sum matches an eigenvalue to 1e-6");

    // phi(p^n - 1) > (p^n - 1)/n for all n past a small threshold, the
    // growth fact behind choosing good twisting exponents.
    let t = phi_threshold(2, 50)?;
    println!("\nphi threshold for p = 2: n0 = {} (failures at {:?})", t.threshold, t.failures);

    // A nonsingular valuation matrix certifies that the twisted curve
    // pair has multiplicatively independent eigenvalue sets.
    let v = valuation_matrix(2, 3, 3)?;
    println!(
        "valuation matrix for p = 2, n = 3, gamma = 3: [[{},{}],[{},{}]], det = {}",
        v.x[0][0], v.x[0][1], v.x[1][0], v.x[1][1], v.det
    );
    assert_ne!(v.det, 0);
    Ok(())
}
