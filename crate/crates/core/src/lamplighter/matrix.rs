use super::element::LampElement;
use crate::polyring::{LaurentPoly, PrimeModulus};

/// A 2x2 matrix over F_p[t, 1/t], row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LampMatrix {
    pub entries: [[LaurentPoly; 2]; 2],
}

impl LampMatrix {
    pub fn identity(p: PrimeModulus) -> Self {
        let (z, o) = (LaurentPoly::zero(p), LaurentPoly::one(p));
        LampMatrix {
            entries: [[o.clone(), z.clone()], [z, o]],
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.entries;
        let b = &other.entries;
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        LampMatrix {
            entries: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]],
        }
    }

    /// Recovers `(p(t), k)` when the matrix has the shape
    /// `[[t^k, p(t)], [0, 1]]`.
    pub fn to_element(&self) -> Option<LampElement> {
        let [[top, lamp], [low, one]] = &self.entries;
        let p = top.modulus();
        let unit_top = top.unit_part().is_one();
        (unit_top && low.is_zero() && *one == LaurentPoly::one(p))
            .then(|| LampElement::new(lamp.clone(), top.valuation()))
    }
}

/// `(p(t), k) -> [[t^k, p(t)], [0, 1]]`.
pub fn to_matrix(x: &LampElement) -> LampMatrix {
    let p = x.modulus();
    LampMatrix {
        entries: [
            [LaurentPoly::monomial(p, 1, x.shift()), x.lamp().clone()],
            [LaurentPoly::zero(p), LaurentPoly::one(p)],
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_matrices() {
        let p = PrimeModulus::new(2).unwrap();
        let (z, o, t) = (
            LaurentPoly::zero(p),
            LaurentPoly::one(p),
            LaurentPoly::monomial(p, 1, 1),
        );
        let s0 = to_matrix(&LampElement::s0(p));
        assert_eq!(s0.entries, [[o.clone(), o.clone()], [z.clone(), o.clone()]]);
        let tm = to_matrix(&LampElement::t(p));
        assert_eq!(tm.entries, [[t, z.clone()], [z, o]]);
        assert_eq!(to_matrix(&LampElement::identity(p)), LampMatrix::identity(p));
    }

    #[test]
    fn compose_agrees_with_matrix_product() {
        let p = PrimeModulus::new(2).unwrap();
        let x = LampElement::new(LaurentPoly::one(p), 1);
        let y = LampElement::s0(p);
        let prod = to_matrix(&x).mul(&to_matrix(&y));
        assert_eq!(prod.to_element().unwrap().to_string(), "(1+t, 1)");
    }
}
