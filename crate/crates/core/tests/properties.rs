//! Randomized invariants across the library.

use proptest::prelude::*;

use qmds::cert::{make_certificate, verify_certificate, Certificate, Construction};
use qmds::circulant::{h_m, rotate, CirculantCandidate};
use qmds::codes::LinearCode;
use qmds::search::{normalize, SearchConfig};
use qmds::{Elem, Field, FieldRef, Matrix};

fn field(q: u32) -> FieldRef {
    Field::for_q(q).unwrap()
}

fn elem(f: &FieldRef, i: u32) -> Elem {
    f.elements().nth((i % f.order()) as usize).unwrap()
}

fn nonzero(f: &FieldRef, i: u32) -> Elem {
    f.eps_pow((i % (f.order() - 1)) as u64)
}

proptest! {
    #[test]
    fn conj_is_additive_and_multiplicative(q in prop::sample::select(vec![2u32, 3, 4, 5, 7, 8]), a: u32, b: u32) {
        let f = field(q);
        let (x, y) = (elem(&f, a), elem(&f, b));
        prop_assert_eq!(f.conj(f.add(x, y)), f.add(f.conj(x), f.conj(y)));
        prop_assert_eq!(f.conj(f.mul(x, y)), f.mul(f.conj(x), f.conj(y)));
        prop_assert_eq!(f.conj(f.conj(x)), x);
        prop_assert!(f.in_subfield(f.norm(x).unwrap()).unwrap());
    }

    #[test]
    fn division_inverts_multiplication(q in prop::sample::select(vec![3u32, 4, 5, 7]), a: u32, b: u32) {
        let f = field(q);
        let (x, y) = (elem(&f, a), nonzero(&f, b));
        prop_assert_eq!(f.mul(f.div(x, y).unwrap(), y), x);
        prop_assert_eq!(f.sub(f.add(x, y), y), x);
    }

    #[test]
    fn normalization_is_a_class_invariant(
        q in prop::sample::select(vec![3u32, 4, 5]),
        raw in prop::collection::vec(any::<u32>(), 2..9),
        s: u32,
        shift in 0usize..9,
    ) {
        let f = field(q);
        let x: Vec<Elem> = raw.iter().map(|&i| nonzero(&f, i)).collect();
        let cfg = SearchConfig::new(&f, x.len());
        let n = normalize(&x, &cfg).unwrap();
        prop_assert_eq!(normalize(&n, &cfg).unwrap(), n.clone());
        prop_assert_eq!(*n.last().unwrap(), Elem::ONE);
        let c = nonzero(&f, s);
        let moved: Vec<Elem> = rotate(&x, shift).iter().map(|&a| f.mul(a, c)).collect();
        prop_assert_eq!(normalize(&moved, &cfg).unwrap(), n);
    }

    #[test]
    fn h_values_are_conjugate_symmetric(
        q in prop::sample::select(vec![3u32, 4, 5]),
        raw in prop::collection::vec(any::<u32>(), 2..9),
    ) {
        let f = field(q);
        let x: Vec<Elem> = raw.iter().map(|&i| elem(&f, i)).collect();
        let k = x.len();
        for m in 1..k {
            prop_assert_eq!(h_m(&f, &x, k - m), f.conj(h_m(&f, &x, m)));
        }
        prop_assert!(f.in_subfield(h_m(&f, &x, 0)).unwrap());
    }

    #[test]
    fn dual_dimensions_add_up(
        q in prop::sample::select(vec![2u32, 3, 4]),
        rows in 1usize..4,
        extra in 0usize..4,
        raw in prop::collection::vec(any::<u32>(), 28),
    ) {
        let f = field(q);
        let n = rows + extra + 1;
        let data: Vec<Elem> = raw.iter().take(rows * n).map(|&i| elem(&f, i)).collect();
        let g = Matrix::new(&f, rows, n, data).unwrap();
        let c = LinearCode::spanned_by(&g).unwrap();
        let d = c.hermitian_dual();
        prop_assert_eq!(c.dim() + d.dim(), n);
        prop_assert!(d.hermitian_dual().same_row_space(&c));
        for u in c.generator().row_vecs() {
            for v in d.generator().row_vecs() {
                prop_assert!(qmds::codes::hermitian_inner(&f, &u, &v).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn certificate_text_is_stable_under_reparse() {
    let f = field(3);
    for x in ["e^2,e^3,e^3,e^2,e^0", "e^0,e^1,e^6,e^1,e^0"] {
        let c = CirculantCandidate::new(&f, f.parse_vector(x).unwrap()).unwrap();
        let cert = make_certificate(&Construction::Circulant(c)).unwrap();
        let text = cert.to_text();
        let again = Certificate::parse(&text).unwrap().certificate.to_text();
        assert_eq!(again, text);
        assert!(verify_certificate(&text).unwrap().passed());
        assert!(cert.quantum.is_mds());
    }
}
