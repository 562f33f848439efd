use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::solution::{mkl_to_xyz, SolutionMKL, SolutionXYZ};
use super::symmetry::canonical_form;
use crate::arith::{icbrt, Polynomial, Rational};
use crate::error::{Error, Result};

/// Pagliani's family at parameter `u`:
/// `m = (u-1)(u³-2u²-4u-4)/6`, `k = u³`, `l = u(u²-1)(u²+2)/6`.
///
/// For `u < 0` the formulas give `k < 0`; the triple is reflected to
/// `(m+k, -k, -l)`, which sums the same cubes in the other direction.
pub fn pagliani(u: &BigInt) -> Result<SolutionMKL> {
    if (u % BigInt::from(3)).is_zero() {
        return Err(Error::NonIntegralFamilyMember(u.to_string()));
    }
    let u2 = u * u;
    let u3 = &u2 * u;
    let m: BigInt = (u - 1) * (&u3 - BigInt::from(2) * &u2 - BigInt::from(4) * u - 4) / 6;
    let l: BigInt = u * (&u2 - 1) * (&u2 + 2) / 6;
    let k = u3;
    let sol = if k.is_negative() {
        SolutionMKL { m: &m + &k, k: -k, l: -l }
    } else {
        SolutionMKL { m, k, l }
    };
    debug_assert!(sol.is_valid());
    Ok(sol)
}

/// `Some(u)` with `u ≥ 2` if the orbit of `sol` contains `pagliani(u)`.
///
/// `u` and `-u` give the same triple, so only `u ≥ 2` is reported.
pub fn in_pagliani_family(sol: &SolutionXYZ) -> Option<BigInt> {
    let c = canonical_form(sol);
    let found = [&c.x, &c.y]
        .into_iter()
        .filter(|v| v.is_positive())
        .filter_map(|v| match icbrt(v) {
            Ok((r, true)) => Some(r),
            _ => None,
        })
        .filter(|u| u >= &BigInt::from(2) && !(u % BigInt::from(3)).is_zero())
        .find(|u| pagliani(u).is_ok_and(|p| canonical_form(&mkl_to_xyz(&p)) == c));
    found
}

/// Every `u ≥ 2`, `3 ∤ u`, whose canonical triple has largest coordinate `≤ bound`.
pub fn pagliani_u_up_to(bound: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for u in 2u64.. {
        if u % 3 == 0 {
            continue;
        }
        let c = canonical_form(&mkl_to_xyz(&pagliani(&u.into()).expect("3 does not divide u")));
        // x = max((u²-1)²/3, u³) grows with u
        if c.x.to_u64().is_none_or(|x| x > bound) {
            break;
        }
        out.push(u);
    }
    out
}

/// `(m(u), k(u), l(u))` as polynomials over `Q`.
pub fn pagliani_polynomials() -> (Polynomial<Rational>, Polynomial<Rational>, Polynomial<Rational>) {
    let sixth = Rational::new(BigInt::one(), BigInt::from(6));
    let m = (&Polynomial::from_ints(&[-1, 1]) * &Polynomial::from_ints(&[-4, -4, -2, 1])).scale(&sixth);
    let k = Polynomial::from_ints(&[0, 0, 0, 1]);
    let l = Polynomial::from_ints(&[0, -2, 0, 1, 0, 1]).scale(&sixth);
    (m, k, l)
}

/// Whether `Σ_{j<k} (m+j)³ - l³` vanishes identically in `Q[u]`.
pub fn pagliani_identity_holds() -> bool {
    let (m, k, l) = pagliani_polynomials();
    let one = Polynomial::<Rational>::one();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let s = |n: &Polynomial<Rational>| (n * &(n + &one)).scale(&half).pow(2);
    let top = &(&m + &k) - &one;
    let bottom = &m - &one;
    (&(&s(&top) - &s(&bottom)) - &l.pow(3)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p2 = pagliani(&2.into()).unwrap();
        assert_eq!(p2, SolutionMKL::new(-2, 8, 6).unwrap());
        assert_eq!(
            canonical_form(&mkl_to_xyz(&p2)),
            SolutionXYZ::new_unchecked(8, 3, 12)
        );
        assert_eq!(pagliani(&4.into()).unwrap(), SolutionMKL::new(6, 64, 180).unwrap());
        assert!(pagliani(&3.into()).is_err());
    }

    #[test]
    fn family_membership() {
        let img = mkl_to_xyz(&pagliani(&2.into()).unwrap());
        assert_eq!(in_pagliani_family(&img), Some(2.into()));
        assert_eq!(in_pagliani_family(&SolutionXYZ::new_unchecked(8, 3, 12)), Some(2.into()));
        assert_eq!(in_pagliani_family(&SolutionXYZ::new_unchecked(1, 1, 1)), None);
        for u in [4, 5, 7, 8, 10, 11] {
            let s = mkl_to_xyz(&pagliani(&u.into()).unwrap());
            assert_eq!(in_pagliani_family(&s), Some(u.into()));
        }
    }

    #[test]
    fn negative_parameters_reflect() {
        for u in [2i64, 4, 5, 7] {
            assert_eq!(pagliani(&(-u).into()).unwrap(), pagliani(&u.into()).unwrap());
        }
    }

    #[test]
    fn symbolic_identity() {
        assert!(pagliani_identity_holds());
    }

    #[test]
    fn members_up_to() {
        assert_eq!(pagliani_u_up_to(10), vec![2]);
        assert_eq!(pagliani_u_up_to(74), vec![2]);
        assert_eq!(pagliani_u_up_to(75), vec![2, 4]);
    }
}
