//! Orders of finite orthogonal groups and of the finite (spherical) Coxeter groups.

use crate::field::SquareClass;
use crate::space::ModularSpace;

fn pw(p: u64, e: u32) -> u128 {
    (p as u128).pow(e)
}

/// `|O(n, p, ε)|` for a nonsingular form of dimension `n` and Witt type `ε`.
pub fn orthogonal_order(n: usize, p: u64, eps: i8) -> u128 {
    match n {
        0 => 1,
        1 => 2,
        _ if n % 2 == 1 => {
            let m = (n / 2) as u32;
            2 * pw(p, m * m) * (1..=m).map(|i| pw(p, 2 * i) - 1).product::<u128>()
        }
        _ => {
            let m = (n / 2) as u32;
            let top = if eps >= 0 { pw(p, m) - 1 } else { pw(p, m) + 1 };
            2 * pw(p, m * (m - 1)) * top * (1..m).map(|i| pw(p, 2 * i) - 1).product::<u128>()
        }
    }
}

/// `|O₁(n, p, ε)|`, generated by reflections in unit vectors: index 2 in
/// `O(n, p, ε)` for `n ≥ 2`; on a line it is all of `O(1)` iff the form is a square.
pub fn o1_order(n: usize, p: u64, eps: i8, disc: SquareClass) -> u128 {
    match n {
        0 => 1,
        1 if disc == SquareClass::Square => 2,
        1 => 1,
        _ => orthogonal_order(n, p, eps) / 2,
    }
}

/// The two small cases where `O₁` (generated by reflections in unit roots)
/// has index 3 in the spinor kernel: `O(3,3,0)` with disc ∼ 1 and `O(4,3,+1)`.
pub fn is_exceptional(n: usize, p: u64, eps: i8, disc: SquareClass) -> bool {
    p == 3 && ((n == 3 && disc == SquareClass::Square) || (n == 4 && eps == 1))
}

/// `|Ô(W)| = p^{r(d−r)} |O(W/rad W)|` for a `d`-dimensional space with `r`-dimensional radical.
pub fn hat_orthogonal_order(d: usize, r: usize, p: u64, quotient_eps: i8) -> u128 {
    pw(p, (r * (d - r)) as u32) * orthogonal_order(d - r, p, quotient_eps)
}

/// `|Ô₁(W)| = p^{r(d−r)} |O₁(W/rad W)|`.
pub fn hat_o1_order(d: usize, r: usize, p: u64, quotient_eps: i8, quotient_disc: SquareClass) -> u128 {
    pw(p, (r * (d - r)) as u32) * o1_order(d - r, p, quotient_eps, quotient_disc)
}

/// `(|O(V)|, |O₁(V)|)`, or the hatted versions when `V` is singular.
pub fn space_orders(space: &ModularSpace) -> (u128, u128) {
    let q = space.quotient_form();
    let eps = q.witt_epsilon().expect("quotient form is nonsingular");
    let (d, r) = (space.dim(), space.radical().len());
    (
        hat_orthogonal_order(d, r, space.p(), eps),
        hat_o1_order(d, r, space.p(), eps, q.disc()),
    )
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// Finite irreducible Coxeter groups of the given rank (including the
/// non-crystallographic H₃, H₄ for completeness), with their orders.
pub fn spherical_orders(rank: usize) -> Vec<(String, u128)> {
    let n = rank as u128;
    let mut out = vec![(format!("A{rank}"), factorial(n + 1))];
    if rank >= 2 {
        out.push((format!("B{rank}"), (1u128 << rank) * factorial(n)));
    }
    if rank >= 4 {
        out.push((format!("D{rank}"), (1u128 << (rank - 1)) * factorial(n)));
    }
    let extra: &[(&str, usize, u128)] = &[
        ("G2", 2, 12),
        ("H3", 3, 120),
        ("F4", 4, 1152),
        ("H4", 4, 14400),
        ("E6", 6, 51840),
        ("E7", 7, 2903040),
        ("E8", 8, 696729600),
    ];
    out.extend(
        extra
            .iter()
            .filter(|(_, r, _)| *r == rank)
            .map(|(s, _, o)| (s.to_string(), *o)),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_orders() {
        assert_eq!(orthogonal_order(5, 3, 0), 103680);
        assert_eq!(orthogonal_order(6, 3, 1), 24261120);
        assert_eq!(orthogonal_order(2, 5, -1), 12);
        assert_eq!(orthogonal_order(2, 7, 1), 12);
        assert_eq!(o1_order(2, 5, -1, SquareClass::NonSquare), 6);
        assert_eq!(o1_order(3, 5, 0, SquareClass::Square), 120);
        assert_eq!(orthogonal_order(3, 3, 0), 48);
        assert_eq!(orthogonal_order(4, 3, 1), 1152);
        // O_1(5,p,0) = p^4 (p^4 - 1)(p^2 - 1)
        let p: u128 = 7;
        assert_eq!(o1_order(5, 7, 0, SquareClass::Square), p.pow(4) * (p.pow(4) - 1) * (p * p - 1));
    }

    #[test]
    fn hat_orders() {
        // [inf]: radical 1-dim in a 2-dim space, quotient O(1) of order 2
        assert_eq!(hat_orthogonal_order(2, 1, 7, 0), 14);
        assert_eq!(hat_o1_order(2, 1, 7, 0, SquareClass::Square), 14);
        assert_eq!(hat_o1_order(2, 1, 7, 0, SquareClass::NonSquare), 7);
    }

    #[test]
    fn spherical_table() {
        let r3: Vec<_> = spherical_orders(3);
        assert!(r3.contains(&("A3".into(), 24)));
        assert!(r3.contains(&("B3".into(), 48)));
        assert!(spherical_orders(4).contains(&("F4".into(), 1152)));
        assert!(spherical_orders(2).contains(&("G2".into(), 12)));
    }
}
