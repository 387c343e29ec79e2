mod support;

use ccgraph::curves::{dehn_twist, geometric_intersection, CurveWord};
use ccgraph::surface::make_bounded_surface;

fn check_surface(p: usize, b: usize, max: usize) -> (usize, usize) {
    let f = make_bounded_surface(p, b).unwrap();
    let curves = support::simple_curves(&f, max);
    let mut pairs = 0;
    for x in &curves {
        for y in &curves {
            let (expected, _) = support::min_intersection(&f, x.letters(), y.letters());
            assert_eq!(geometric_intersection(&f, x, y), expected, "i({x}, {y})");
            for sign in [1, -1] {
                let ours = dehn_twist(&f, y, x, sign).unwrap();
                let theirs = CurveWord::Closed(support::twist(&f, y.letters(), x.letters(), sign));
                assert!(ours.same_closed_curve(&theirs), "twist^{sign} of {x} about {y}: {ours} vs {theirs}");
            }
            pairs += 1;
        }
    }
    (curves.len(), pairs)
}

#[test]
fn annulus_agrees_with_oracle() {
    let (n, _) = check_surface(0, 2, 6);
    assert_eq!(n, 1);
}

#[test]
fn one_holed_torus_agrees_with_oracle() {
    let (n, pairs) = check_surface(1, 1, 6);
    assert!(n > 10, "{n}");
    assert_eq!(pairs, n * n);
}

#[test]
fn pair_of_pants_agrees_with_oracle() {
    let (n, _) = check_surface(0, 3, 6);
    assert_eq!(n, 3);
}

#[test]
fn two_holed_torus_agrees_with_oracle() {
    let (n, _) = check_surface(1, 2, 4);
    assert!(n > 10, "{n}");
}

#[test]
fn genus_two_agrees_with_oracle() {
    let (n, _) = check_surface(2, 1, 3);
    assert!(n > 10, "{n}");
}
