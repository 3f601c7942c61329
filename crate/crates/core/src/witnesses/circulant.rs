use crate::linops::{BipartiteOperator, CMatrix};
use crate::C64;

/// Parameters of the qutrit circulant witness family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CirculantParams {
    pub a: f64,
    pub b: f64,
    pub x: f64,
    pub z: C64,
}

const R3: f64 = 1.732_050_807_568_877_2;

/// `(Γ, a, b, x, Re z, Im z)`
const TABLE: [([usize; 2], f64, f64, f64, f64, f64); 6] = [
    ([1, 2], 0.0, 3.0, 1.0, -2.0, 0.0),
    ([1, 3], 0.0, 3.0, 1.0, 1.0, -R3),
    ([1, 4], 0.0, 3.0, 1.0, 1.0, R3),
    ([3, 4], 4.0, 1.0, -1.0, 2.0, 0.0),
    ([2, 4], 4.0, 1.0, -1.0, -1.0, R3),
    ([2, 3], 4.0, 1.0, -1.0, -1.0, -R3),
];

/// All six tabulated rows, in table order.
pub fn table1() -> [([usize; 2], CirculantParams); 6] {
    TABLE.map(|(g, a, b, x, re, im)| {
        (
            g,
            CirculantParams {
                a,
                b,
                x,
                z: C64::new(re, im),
            },
        )
    })
}

/// Row for a two-element `Γ`, in either order.
pub fn table1_lookup(gamma: &[usize]) -> Option<CirculantParams> {
    let [p, q] = gamma else { return None };
    table1()
        .into_iter()
        .find(|(g, _)| (g[0] == *p && g[1] == *q) || (g[0] == *q && g[1] == *p))
        .map(|(_, c)| c)
}

/// Pattern codes: 0 zero, 1 a, 2 b, 3 x, 4 z, 5 z*.
const PATTERN: [[u8; 9]; 9] = [
    [1, 0, 0, 0, 3, 0, 0, 0, 3],
    [0, 2, 0, 0, 0, 4, 5, 0, 0],
    [0, 0, 2, 5, 0, 0, 0, 4, 0],
    [0, 0, 4, 2, 0, 0, 0, 5, 0],
    [3, 0, 0, 0, 1, 0, 0, 0, 3],
    [0, 5, 0, 0, 0, 2, 4, 0, 0],
    [0, 4, 0, 0, 0, 5, 2, 0, 0],
    [0, 0, 5, 4, 0, 0, 0, 2, 0],
    [3, 0, 0, 0, 3, 0, 0, 0, 1],
];

pub fn circulant_witness(p: &CirculantParams) -> BipartiteOperator {
    let m = CMatrix::from_fn(9, 9, |i, j| match PATTERN[i][j] {
        1 => C64::new(p.a, 0.0),
        2 => C64::new(p.b, 0.0),
        3 => C64::new(p.x, 0.0),
        4 => p.z,
        5 => p.z.conj(),
        _ => C64::new(0.0, 0.0),
    });
    BipartiteOperator::square(3, m).expect("9×9")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_is_hermitian() {
        for (_, p) in table1() {
            assert!(circulant_witness(&p).is_hermitian(0.0));
        }
    }

    #[test]
    fn lookup_is_order_free() {
        assert_eq!(table1_lookup(&[2, 1]), table1_lookup(&[1, 2]));
        assert_eq!(table1_lookup(&[1, 2]).unwrap().z, C64::new(-2.0, 0.0));
        assert!(table1_lookup(&[1]).is_none());
        assert!(table1_lookup(&[1, 1]).is_none());
    }

    #[test]
    fn sqrt3_constant() {
        assert_eq!(R3, libm::sqrt(3.0));
    }
}
