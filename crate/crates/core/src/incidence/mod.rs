//! The coordinate affine plane AG(2, D) over a division ring D.
//!
//! Lines are the solution sets of right-linear equations `x·a + y·b = c`,
//! kept in a normal form where the leading nonzero coefficient of `(a, b)`
//! is one. Under this convention the plane is D² viewed as a left vector
//! space, and two lines are equal as point sets exactly when their normal
//! forms are equal.
//!
//! The incidence primitives sit behind the [`Incidence`] trait; checkers
//! accept any implementation, including deliberately corrupted ones.

mod axioms;
mod desargues;
mod pappus;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::DivisionRing;

pub use axioms::{check_affine_axioms, PlaneIndex};
pub use desargues::{
    check_desargues, check_desargues_config, desargues_conclusion, validate_desargues, DesarguesClause, DesarguesConfig,
};
pub use pappus::{
    check_pappus, check_pappus_countermodel, describe as describe_pappus, find_pappus_violation, pappus_conclusion,
    validate_pappus, PappusClause, PappusConfig, PappusSearch,
};

pub type Elem<G> = <<G as Incidence>::Ring as DivisionRing>::Elem;
pub type PointOf<G> = Point<Elem<G>>;
pub type LineOf<G> = Line<Elem<G>>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point<E> {
    pub x: E,
    pub y: E,
}

impl<E> Point<E> {
    pub fn new(x: E, y: E) -> Self {
        Point { x, y }
    }
}

/// `{(x, y) : x·a + y·b = c}` in normal form: `a = 1`, or `a = 0` and `b = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Line<E> {
    a: E,
    b: E,
    c: E,
}

impl<E: Clone + Eq> Line<E> {
    /// Normalizes `x·a + y·b = c` by right-multiplying with the inverse of the
    /// leading coefficient.
    pub fn from_equation<R>(ring: &R, a: E, b: E, c: E) -> Result<Self>
    where
        R: DivisionRing<Elem = E>,
    {
        if !ring.is_zero(&a) {
            let s = ring.inv(&a)?;
            Ok(Line { a: ring.one(), b: ring.mul(&b, &s), c: ring.mul(&c, &s) })
        } else if !ring.is_zero(&b) {
            let s = ring.inv(&b)?;
            Ok(Line { a: ring.zero(), b: ring.one(), c: ring.mul(&c, &s) })
        } else {
            Err(Error::Degenerate("line equation with a = b = 0"))
        }
    }

    pub fn coefficients(&self) -> (&E, &E, &E) {
        (&self.a, &self.b, &self.c)
    }

    /// The normalized `(a, b)` pair; equal exactly for parallel lines.
    pub fn direction(&self) -> (&E, &E) {
        (&self.a, &self.b)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Intersection<E> {
    Point(Point<E>),
    Parallel,
    Coincident,
}

/// Incidence primitives of a coordinate affine plane.
pub trait Incidence: Sync {
    type Ring: DivisionRing;

    fn ring(&self) -> &Self::Ring;

    /// The unique line through two distinct points.
    fn line_through(&self, p: &PointOf<Self>, q: &PointOf<Self>) -> Result<LineOf<Self>>;

    /// The line through `p` parallel to `l` (`l` itself when `p ∈ l`).
    fn parallel_through(&self, p: &PointOf<Self>, l: &LineOf<Self>) -> LineOf<Self>;

    fn intersect(&self, l1: &LineOf<Self>, l2: &LineOf<Self>) -> Intersection<Elem<Self>>;

    fn contains(&self, l: &LineOf<Self>, p: &PointOf<Self>) -> bool;

    /// Parallel in the affine sense: equal or disjoint.
    fn is_parallel(&self, l1: &LineOf<Self>, l2: &LineOf<Self>) -> bool {
        !matches!(self.intersect(l1, l2), Intersection::Point(_))
    }

    /// Intersection point of two lines a construction step expects to cross.
    fn meet(&self, l1: &LineOf<Self>, l2: &LineOf<Self>, step: &str) -> Result<PointOf<Self>> {
        match self.intersect(l1, l2) {
            Intersection::Point(p) => Ok(p),
            Intersection::Parallel => Err(Error::ConstructionInvariant(format!("{step}: lines are parallel"))),
            Intersection::Coincident => Err(Error::ConstructionInvariant(format!("{step}: lines coincide"))),
        }
    }

    fn collinear(&self, p: &PointOf<Self>, q: &PointOf<Self>, r: &PointOf<Self>) -> bool {
        if p == q {
            return true;
        }
        self.line_through(p, q).map(|l| self.contains(&l, r)).unwrap_or(true)
    }

    /// The point of `l` with parameter `t`: `(t, c)` on a line `y = c`,
    /// otherwise `(c − t·b, t)`.
    fn point_on(&self, l: &LineOf<Self>, t: &Elem<Self>) -> PointOf<Self> {
        let r = self.ring();
        let (a, b, c) = l.coefficients();
        if r.is_zero(a) {
            Point::new(t.clone(), c.clone())
        } else {
            Point::new(r.sub(c, &r.mul(t, b)), t.clone())
        }
    }

    /// All `q²` points, `x` outermost, both coordinates in ring order.
    fn points(&self) -> Result<Vec<PointOf<Self>>> {
        let els = self.ring().elements().map_err(|_| Error::Unsupported("point enumeration"))?;
        Ok(els.iter().flat_map(|x| els.iter().map(move |y| Point::new(x.clone(), y.clone()))).collect())
    }

    /// All `q² + q` lines: the `q` lines `y = c`, then `x + y·b = c` by `b`, `c`.
    fn lines(&self) -> Result<Vec<LineOf<Self>>> {
        let r = self.ring();
        let els = r.elements().map_err(|_| Error::Unsupported("line enumeration"))?;
        let mut out = Vec::with_capacity(els.len() * (els.len() + 1));
        for c in &els {
            out.push(Line { a: r.zero(), b: r.one(), c: c.clone() });
        }
        for b in &els {
            for c in &els {
                out.push(Line { a: r.one(), b: b.clone(), c: c.clone() });
            }
        }
        Ok(out)
    }

    /// The `q` points of a line in parameter order.
    fn line_points(&self, l: &LineOf<Self>) -> Result<Vec<PointOf<Self>>> {
        let els = self.ring().elements().map_err(|_| Error::Unsupported("line enumeration"))?;
        Ok(els.iter().map(|t| self.point_on(l, t)).collect())
    }

    /// A canonical point off `l`: the first enumerated point on finite
    /// planes, otherwise `base` shifted one unit across `l`.
    fn off_line_point(&self, l: &LineOf<Self>, base: &PointOf<Self>) -> PointOf<Self> {
        let r = self.ring();
        if let Ok(points) = self.points() {
            if let Some(p) = points.into_iter().find(|p| !self.contains(l, p)) {
                return p;
            }
        }
        let (a, _, _) = l.coefficients();
        let p = if r.is_zero(a) {
            Point::new(base.x.clone(), r.add(&base.y, &r.one()))
        } else {
            Point::new(r.add(&base.x, &r.one()), base.y.clone())
        };
        debug_assert!(!self.contains(l, &p));
        p
    }

    fn random_point<G: Rng + ?Sized>(&self, rng: &mut G, bound: u32) -> PointOf<Self> {
        let r = self.ring();
        Point::new(r.random_element(rng, bound), r.random_element(rng, bound))
    }

    /// A line through two distinct random points.
    fn random_line<G: Rng + ?Sized>(&self, rng: &mut G, bound: u32) -> LineOf<Self> {
        let p = self.random_point(rng, bound);
        loop {
            let q = self.random_point(rng, bound);
            if let Ok(l) = self.line_through(&p, &q) {
                return l;
            }
        }
    }

    fn format_point(&self, p: &PointOf<Self>) -> String {
        let r = self.ring();
        format!("({}; {})", r.format_element(&p.x), r.format_element(&p.y))
    }

    fn format_line(&self, l: &LineOf<Self>) -> String {
        let r = self.ring();
        let (a, b, c) = l.coefficients();
        format!("[x*({}) + y*({}) = {}]", r.format_element(a), r.format_element(b), r.format_element(c))
    }

    /// Parses `x,y`, where each coordinate uses the ring's element syntax.
    fn parse_point(&self, text: &str) -> Result<PointOf<Self>> {
        let r = self.ring();
        let tokens: Vec<&str> = text.split(',').collect();
        let w = r.element_arity();
        if tokens.len() != 2 * w {
            return Err(Error::parse("point", text));
        }
        let x = r.parse_element(&tokens[..w].join(","))?;
        let y = r.parse_element(&tokens[w..].join(","))?;
        Ok(Point::new(x, y))
    }
}

/// AG(2, D) over the ring `R`.
#[derive(Clone, Debug)]
pub struct Plane<R> {
    ring: R,
}

impl<R: DivisionRing> Plane<R> {
    pub fn new(ring: R) -> Self {
        Plane { ring }
    }

    pub fn point(&self, x: R::Elem, y: R::Elem) -> Point<R::Elem> {
        Point::new(x, y)
    }

    /// The x-axis `y = 0`.
    pub fn x_axis(&self) -> Line<R::Elem> {
        Line { a: self.ring.zero(), b: self.ring.one(), c: self.ring.zero() }
    }

    pub fn origin(&self) -> Point<R::Elem> {
        Point::new(self.ring.zero(), self.ring.zero())
    }

    pub fn unit_x(&self) -> Point<R::Elem> {
        Point::new(self.ring.one(), self.ring.zero())
    }
}

impl<R: DivisionRing> Incidence for Plane<R> {
    type Ring = R;

    fn ring(&self) -> &R {
        &self.ring
    }

    fn line_through(&self, p: &Point<R::Elem>, q: &Point<R::Elem>) -> Result<Line<R::Elem>> {
        if p == q {
            return Err(Error::Degenerate("line through a point and itself"));
        }
        let r = &self.ring;
        if p.y == q.y {
            return Ok(Line { a: r.zero(), b: r.one(), c: p.y.clone() });
        }
        // (xp − xq) + (yp − yq)·b = 0
        let dy_inv = r.inv(&r.sub(&p.y, &q.y))?;
        let b = r.neg(&r.mul(&dy_inv, &r.sub(&p.x, &q.x)));
        let c = r.add(&p.x, &r.mul(&p.y, &b));
        Ok(Line { a: r.one(), b, c })
    }

    fn parallel_through(&self, p: &Point<R::Elem>, l: &Line<R::Elem>) -> Line<R::Elem> {
        let r = &self.ring;
        let c = r.add(&r.mul(&p.x, &l.a), &r.mul(&p.y, &l.b));
        Line { a: l.a.clone(), b: l.b.clone(), c }
    }

    fn intersect(&self, l1: &Line<R::Elem>, l2: &Line<R::Elem>) -> Intersection<R::Elem> {
        let r = &self.ring;
        if l1.direction() == l2.direction() {
            return if l1.c == l2.c { Intersection::Coincident } else { Intersection::Parallel };
        }
        let one = r.one();
        let p = match (l1.a == one, l2.a == one) {
            (true, true) => {
                // y·(b1 − b2) = c1 − c2
                let db = r.sub(&l1.b, &l2.b);
                let y = r.mul(&r.sub(&l1.c, &l2.c), &r.inv(&db).expect("distinct directions"));
                let x = r.sub(&l1.c, &r.mul(&y, &l1.b));
                Point::new(x, y)
            }
            (true, false) => {
                let y = l2.c.clone();
                Point::new(r.sub(&l1.c, &r.mul(&y, &l1.b)), y)
            }
            (false, true) => {
                let y = l1.c.clone();
                Point::new(r.sub(&l2.c, &r.mul(&y, &l2.b)), y)
            }
            (false, false) => unreachable!("two lines y = c share a direction"),
        };
        Intersection::Point(p)
    }

    fn contains(&self, l: &Line<R::Elem>, p: &Point<R::Elem>) -> bool {
        let r = &self.ring;
        r.add(&r.mul(&p.x, &l.a), &r.mul(&p.y, &l.b)) == l.c
    }
}
