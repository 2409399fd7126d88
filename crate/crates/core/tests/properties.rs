use proptest::prelude::*;
use skewplane::dilation::{enumerate_dilations, DilationKind, DilationMap};
use skewplane::incidence::Intersection;
use skewplane::line_algebra::{check_aux_independence, check_coordinate_oracle, verify_skewfield};
use skewplane::{
    AuxPolicy, DivisionRing, GaloisField, GfElem, Incidence, LineAlgebra, Mode, Plane, Point, Quaternion, Quaternions,
    Sampling,
};

fn gf(p: u64, k: u32) -> Plane<GaloisField> {
    Plane::new(GaloisField::new(p, k).unwrap())
}

fn small_fields() -> impl Strategy<Value = (u64, u32)> {
    prop::sample::select(vec![(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    let r = || (-6i64..=6, 1i64..=6);
    (r(), r(), r(), r()).prop_map(|((a, da), (b, db), (c, dc), (d, dd))| {
        let q = |n: i64, m: i64| num::BigRational::new(n.into(), m.into());
        Quaternion::new(q(a, da), q(b, db), q(c, dc), q(d, dd))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn line_through_contains_both_points((p, k) in small_fields(), a in any::<u32>(), b in any::<u32>()) {
        let plane = gf(p, k);
        let pts = plane.points().unwrap();
        let (x, y) = (&pts[a as usize % pts.len()], &pts[b as usize % pts.len()]);
        prop_assume!(x != y);
        let l = plane.line_through(x, y).unwrap();
        prop_assert!(plane.contains(&l, x) && plane.contains(&l, y));
        prop_assert_eq!(plane.line_through(y, x).unwrap(), l);
    }

    #[test]
    fn quaternion_line_through_contains_both_points(
        xs in (quaternion(), quaternion()),
        ys in (quaternion(), quaternion()),
    ) {
        let plane = Plane::new(Quaternions);
        let (p, q) = (Point::new(xs.0, xs.1), Point::new(ys.0, ys.1));
        prop_assume!(p != q);
        let l = plane.line_through(&p, &q).unwrap();
        prop_assert!(plane.contains(&l, &p) && plane.contains(&l, &q));
        let par = plane.parallel_through(&p, &l);
        prop_assert_eq!(par, l);
    }

    #[test]
    fn intersect_is_symmetric((p, k) in small_fields(), a in any::<u32>(), b in any::<u32>()) {
        let plane = gf(p, k);
        let lines = plane.lines().unwrap();
        let (l1, l2) = (&lines[a as usize % lines.len()], &lines[b as usize % lines.len()]);
        let meet = plane.intersect(l1, l2);
        prop_assert_eq!(&meet, &plane.intersect(l2, l1));
        match meet {
            Intersection::Point(x) => prop_assert!(plane.contains(l1, &x) && plane.contains(l2, &x)),
            Intersection::Parallel => prop_assert!(plane.is_parallel(l1, l2) && l1 != l2),
            Intersection::Coincident => prop_assert_eq!(l1, l2),
        }
    }

    #[test]
    fn parallel_through_passes_through_point((p, k) in small_fields(), a in any::<u32>(), b in any::<u32>()) {
        let plane = gf(p, k);
        let pts = plane.points().unwrap();
        let lines = plane.lines().unwrap();
        let x = &pts[a as usize % pts.len()];
        let l = &lines[b as usize % lines.len()];
        let par = plane.parallel_through(x, l);
        prop_assert!(plane.contains(&par, x));
        prop_assert!(plane.is_parallel(&par, l));
    }
}

#[test]
fn skewfield_holds_on_every_frame_of_small_planes() {
    for (p, k) in [(2, 1), (3, 1), (2, 2)] {
        let plane = gf(p, k);
        for line in plane.lines().unwrap() {
            let pts = plane.line_points(&line).unwrap();
            for o in &pts {
                for i in pts.iter().filter(|i| *i != o) {
                    let k = LineAlgebra::new(&plane, line.clone(), o.clone(), i.clone(), AuxPolicy::DeterministicFirst)
                        .unwrap();
                    let report = verify_skewfield(&k, Mode::Exhaustive);
                    assert!(report.passed(), "{report}");
                }
            }
        }
    }
}

#[test]
fn quaternion_operations_match_coordinates() {
    let plane = Plane::new(Quaternions);
    let k = LineAlgebra::x_axis(&plane, AuxPolicy::DeterministicFirst).unwrap();
    let report = check_coordinate_oracle(&k, Mode::Sampled(Sampling::new(21, 300)));
    assert!(report.passed(), "{report}");
    let report = check_aux_independence(&k, Mode::Sampled(Sampling::new(22, 5)));
    assert!(report.passed(), "{report}");
}

#[test]
fn dilations_map_lines_to_parallels() {
    for (p, k) in [(3, 1), (2, 2), (5, 1)] {
        let plane = gf(p, k);
        let pts = plane.points().unwrap();
        for d in enumerate_dilations(&plane).unwrap() {
            let img: Vec<_> = pts.iter().map(|q| d.apply(q).unwrap()).collect();
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    let before = plane.line_through(&pts[i], &pts[j]).unwrap();
                    let after = plane.line_through(&img[i], &img[j]).unwrap();
                    assert!(plane.is_parallel(&before, &after), "{}", d.describe());
                }
            }
        }
    }
}

#[test]
fn fixed_points_by_kind() {
    let plane = gf(5, 1);
    let pts = plane.points().unwrap();
    for d in enumerate_dilations(&plane).unwrap() {
        let fixed = pts.iter().filter(|q| d.apply(q).unwrap() == **q).count();
        let expected = match d.kind() {
            DilationKind::Identity => pts.len(),
            DilationKind::Homothety => 1,
            DilationKind::Translation => 0,
        };
        assert_eq!(fixed, expected, "{}", d.describe());
        if let Some(v) = d.center() {
            assert_eq!(d.apply(v).unwrap(), *v);
        }
    }
}

#[test]
fn translations_compose_to_translations() {
    let plane = gf(3, 1);
    let pts = plane.points().unwrap();
    let maps = enumerate_dilations(&plane).unwrap();
    let translations: Vec<_> = maps.iter().filter(|d| d.kind() != DilationKind::Homothety).collect();
    let tables: Vec<Vec<_>> = translations.iter().map(|d| pts.iter().map(|q| d.apply(q).unwrap()).collect()).collect();
    for s in &translations {
        for t in &translations {
            let composed: Vec<_> = pts.iter().map(|q| t.apply(&s.apply(q).unwrap()).unwrap()).collect();
            assert!(tables.contains(&composed));
        }
    }
}

/// `Q ↦ V + r·(Q − V)` where `P′ − V = r·(P − V)`.
fn homothety_oracle<R: DivisionRing>(
    r: &R,
    v: &Point<R::Elem>,
    p: &Point<R::Elem>,
    p2: &Point<R::Elem>,
) -> impl Fn(&Point<R::Elem>) -> Point<R::Elem> {
    let (dx, dy) = (r.sub(&p.x, &v.x), r.sub(&p.y, &v.y));
    let ratio = if r.is_zero(&dx) {
        r.mul(&r.sub(&p2.y, &v.y), &r.inv(&dy).unwrap())
    } else {
        r.mul(&r.sub(&p2.x, &v.x), &r.inv(&dx).unwrap())
    };
    let (r, v) = (r.clone(), v.clone());
    move |q| {
        Point::new(r.add(&v.x, &r.mul(&ratio, &r.sub(&q.x, &v.x))), r.add(&v.y, &r.mul(&ratio, &r.sub(&q.y, &v.y))))
    }
}

#[test]
fn homotheties_match_coordinates() {
    let plane = gf(2, 3);
    let pts = plane.points().unwrap();
    for d in enumerate_dilations(&plane).unwrap() {
        if let (Some(v), Some((p, p2))) = (d.center(), d.reference_pair()) {
            let oracle = homothety_oracle(plane.ring(), v, p, p2);
            for q in &pts {
                assert_eq!(d.apply(q).unwrap(), oracle(q), "{}", d.describe());
            }
        }
    }
}

#[test]
fn quaternion_homotheties_match_coordinates() {
    let plane = Plane::new(Quaternions);
    let s = Sampling::new(4, 60);
    let mut checked = 0;
    for i in 0..s.samples {
        let mut rng = s.rng(i);
        let v = plane.random_point(&mut rng, 6);
        let p = plane.random_point(&mut rng, 6);
        let l = match plane.line_through(&v, &p) {
            Ok(l) => l,
            Err(_) => continue,
        };
        let p2 = plane.point_on(&l, &Quaternions.random_element(&mut rng, 6));
        let Ok(d) = DilationMap::homothety(&plane, v.clone(), p.clone(), p2.clone()) else { continue };
        let oracle = homothety_oracle(&Quaternions, &v, &p, &p2);
        // points on and off the reference line
        let q_off = plane.random_point(&mut rng, 6);
        let q_on = plane.point_on(&l, &Quaternions.random_element(&mut rng, 6));
        for q in [q_off, q_on] {
            assert_eq!(d.apply(&q).unwrap(), oracle(&q));
        }
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn translations_match_coordinates() {
    let plane = gf(3, 2);
    let r = plane.ring();
    let origin = plane.origin();
    for target in plane.points().unwrap().into_iter().filter(|t| *t != origin) {
        let d = DilationMap::translation(&plane, origin.clone(), target.clone()).unwrap();
        for q in plane.points().unwrap() {
            let expected = Point::new(r.add(&q.x, &target.x), r.add(&q.y, &target.y));
            assert_eq!(d.apply(&q).unwrap(), expected);
        }
    }
}

#[test]
fn frame_change_is_covariant() {
    // K framed at (O, I) on y = 0 is the field with zero O and unit I: the
    // point at parameter t corresponds to (t − o)(i − o)⁻¹
    let plane = gf(7, 1);
    let r = plane.ring();
    let axis = plane.x_axis();
    let (o, i) = (GfElem(2), GfElem(5));
    let k = LineAlgebra::new(
        &plane,
        axis,
        Point::new(o, GfElem(0)),
        Point::new(i, GfElem(0)),
        AuxPolicy::DeterministicFirst,
    )
    .unwrap();
    let scale = r.inv(&r.sub(&i, &o)).unwrap();
    let to_std = |p: &Point<GfElem>| r.mul(&r.sub(&p.x, &o), &scale);
    for a in plane.line_points(k.line()).unwrap() {
        for c in plane.line_points(k.line()).unwrap() {
            assert_eq!(to_std(&k.add(&a, &c).unwrap()), r.add(&to_std(&a), &to_std(&c)));
            assert_eq!(to_std(&k.mul(&a, &c).unwrap()), r.mul(&to_std(&a), &to_std(&c)));
        }
    }
}
