mod support;

use std::sync::OnceLock;

use ccgraph::curves::{algebraic_intersection, dehn_twist, geometric_intersection, CurveWord, Letter};
use ccgraph::surface::{make_bounded_surface, PolygonPresentation};
use proptest::prelude::*;

struct Pool {
    f: PolygonPresentation,
    curves: Vec<CurveWord>,
}

fn torus() -> &'static Pool {
    static P: OnceLock<Pool> = OnceLock::new();
    P.get_or_init(|| {
        let f = make_bounded_surface(1, 1).unwrap();
        let curves = support::simple_curves(&f, 5);
        Pool { f, curves }
    })
}

fn two_holed_torus() -> &'static Pool {
    static P: OnceLock<Pool> = OnceLock::new();
    P.get_or_init(|| {
        let f = make_bounded_surface(1, 2).unwrap();
        let curves = support::simple_curves(&f, 4);
        Pool { f, curves }
    })
}

/// Index pairs of distinct disjoint curves in the two-holed torus pool.
fn disjoint_pairs() -> &'static [(usize, usize)] {
    static P: OnceLock<Vec<(usize, usize)>> = OnceLock::new();
    P.get_or_init(|| {
        let p = two_holed_torus();
        let n = p.curves.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| geometric_intersection(&p.f, &p.curves[i], &p.curves[j]) == 0)
            .collect()
    })
}

fn word(m: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..m, any::<bool>()).prop_map(|(a, p)| Letter::new(a, p)), 0..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduce_is_idempotent(w in word(3)) {
        let f = make_bounded_surface(1, 2).unwrap();
        let c = CurveWord::closed(w).reduce(&f);
        prop_assert_eq!(c.reduce(&f), c);
    }

    #[test]
    fn intersection_is_symmetric(i in 0usize..1000, j in 0usize..1000) {
        let p = two_holed_torus();
        let (x, y) = (&p.curves[i % p.curves.len()], &p.curves[j % p.curves.len()]);
        prop_assert_eq!(geometric_intersection(&p.f, x, y), geometric_intersection(&p.f, y, x));
    }

    #[test]
    fn twist_then_inverse_is_identity(i in 0usize..1000, j in 0usize..1000, sign in prop::sample::select(vec![1, -1])) {
        let p = torus();
        let (t, c) = (&p.curves[i % p.curves.len()], &p.curves[j % p.curves.len()]);
        let back = dehn_twist(&p.f, t, &dehn_twist(&p.f, t, c, sign).unwrap(), -sign).unwrap();
        prop_assert!(back.same_closed_curve(c), "{} -> {}", c, back);
    }

    #[test]
    fn twisting_preserves_intersection_with_the_core(i in 0usize..1000, j in 0usize..1000) {
        let p = torus();
        let (t, c) = (&p.curves[i % p.curves.len()], &p.curves[j % p.curves.len()]);
        let x = dehn_twist(&p.f, t, c, 1).unwrap();
        prop_assert_eq!(geometric_intersection(&p.f, &x, t), geometric_intersection(&p.f, c, t));
    }

    #[test]
    fn twist_meets_original_in_square(i in 0usize..1000, j in 0usize..1000) {
        let p = torus();
        let (t, c) = (&p.curves[i % p.curves.len()], &p.curves[j % p.curves.len()]);
        let k = geometric_intersection(&p.f, c, t);
        let x = dehn_twist(&p.f, t, c, 1).unwrap();
        prop_assert_eq!(geometric_intersection(&p.f, &x, c), k * k);
    }

    #[test]
    fn homology_follows_picard_lefschetz(i in 0usize..1000, j in 0usize..1000, sign in prop::sample::select(vec![1i64, -1])) {
        let p = two_holed_torus();
        let m = p.f.arc_count();
        let (t, c) = (&p.curves[i % p.curves.len()], &p.curves[j % p.curves.len()]);
        let x = dehn_twist(&p.f, t, c, sign as i32).unwrap();
        let k = sign * algebraic_intersection(&p.f, c, t);
        let (vc, vt, vx) = (c.algebraic_class(m).unwrap(), t.algebraic_class(m).unwrap(), x.algebraic_class(m).unwrap());
        let want: Vec<i64> = vc.iter().zip(&vt).map(|(a, b)| a + k * b).collect();
        let flipped: Vec<i64> = want.iter().map(|v| -v).collect();
        prop_assert!(vx == want || vx == flipped, "{:?} vs {:?}", vx, want);
    }

    #[test]
    fn disjoint_twists_commute(i in 0usize..10_000, k in 0usize..1000) {
        let p = two_holed_torus();
        let pairs = disjoint_pairs();
        let (a, b) = pairs[i % pairs.len()];
        let (s, t, c) = (&p.curves[a], &p.curves[b], &p.curves[k % p.curves.len()]);
        let st = dehn_twist(&p.f, s, &dehn_twist(&p.f, t, c, 1).unwrap(), 1).unwrap();
        let ts = dehn_twist(&p.f, t, &dehn_twist(&p.f, s, c, 1).unwrap(), 1).unwrap();
        prop_assert!(st.same_closed_curve(&ts));
    }

    #[test]
    fn twist_letter_count_is_bounded(i in 0usize..1000, j in 0usize..1000) {
        let p = torus();
        let (t, c) = (&p.curves[i % p.curves.len()], &p.curves[j % p.curves.len()]);
        let x = dehn_twist(&p.f, t, c, 1).unwrap();
        let k = geometric_intersection(&p.f, c, t);
        prop_assert!(x.letters().len() <= c.letters().len() + k * t.letters().len());
    }
}
