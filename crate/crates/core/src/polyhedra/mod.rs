//! Newton-type polyhedra `conv(points) + R^r_{≥0}` with exact rational
//! arithmetic.

mod lp;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::algebra::{Monomial, Ring};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

pub type Rational = BigRational;

/// Largest dimension for which H-representations are computed.
pub const HREP_DIM_CAP: usize = 4;

/// Inequality `normal · u ≥ rhs` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: Vec<BigInt>,
    pub rhs: Rational,
}

impl Halfspace {
    pub fn satisfied_by(&self, u: &[Rational]) -> bool {
        dot_int(&self.normal, u) >= self.rhs
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut lhs = String::new();
        for (i, c) in self.normal.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !lhs.is_empty() {
                lhs.push_str(" + ");
            }
            if !c.is_one() {
                lhs.push_str(&format!("{c}*"));
            }
            lhs.push_str(&names[i]);
        }
        format!("{lhs} >= {}", self.rhs)
    }
}

fn dot_int(a: &[BigInt], u: &[Rational]) -> Rational {
    a.iter().zip(u).fold(Rational::zero(), |acc, (c, x)| acc + Rational::from_integer(c.clone()) * x)
}

/// Scales a rational vector to a primitive integer vector (same direction).
fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `conv(points) + R^r_{≥0}`.
#[derive(Clone, Debug)]
pub struct MonoPolyhedron {
    dim: usize,
    points: Vec<Vec<Rational>>,
    vertices: OnceLock<Vec<Vec<Rational>>>,
    hrep: OnceLock<Vec<Halfspace>>,
}

impl MonoPolyhedron {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<MonoPolyhedron> {
        if points.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::ArityMismatch(p.len(), dim));
            }
            if p.iter().any(|x| x.is_negative()) {
                return Err(Error::InvalidArgument("polyhedron points must be nonnegative".into()));
            }
        }
        let mut points = points;
        points.sort();
        points.dedup();
        Ok(MonoPolyhedron { dim, points, vertices: OnceLock::new(), hrep: OnceLock::new() })
    }

    pub fn from_integer_points(dim: usize, points: &[Vec<i64>]) -> Result<MonoPolyhedron> {
        MonoPolyhedron::new(dim, points.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Newton polyhedron of a monomial ideal: exponents of the minimal generators.
    pub fn newton(ideal: &MonomialIdeal) -> Result<MonoPolyhedron> {
        let dim = ideal.ring().arity();
        let points =
            ideal.gens().iter().map(|g| g.exps().iter().map(|&e| int(e as i64)).collect()).collect::<Vec<_>>();
        MonoPolyhedron::new(dim, points)
    }

    /// `{"dim": r, "points": [[c, ...], ...]}` where each coordinate is an
    /// integer, a `"p/q"` string or a `[num, den]` pair.
    pub fn from_json(text: &str) -> Result<MonoPolyhedron> {
        let v: Value = serde_json::from_str(text)?;
        let obj = v.as_object().ok_or_else(|| Error::Json("expected an object".into()))?;
        if obj.keys().any(|k| k != "dim" && k != "points") {
            return Err(Error::Json("unknown field in polyhedron".into()));
        }
        let dim = obj
            .get("dim")
            .and_then(|d| d.as_u64())
            .ok_or_else(|| Error::Json("`dim` must be a nonnegative integer".into()))? as usize;
        let pts = obj.get("points").and_then(|p| p.as_array()).ok_or_else(|| Error::Json("`points` must be an array".into()))?;
        let mut points = Vec::with_capacity(pts.len());
        for p in pts {
            let coords = p.as_array().ok_or_else(|| Error::Json("each point must be an array".into()))?;
            points.push(coords.iter().map(parse_coordinate).collect::<Result<Vec<_>>>()?);
        }
        MonoPolyhedron::new(dim, points)
    }

    pub fn to_json_value(&self) -> Value {
        let pts: Vec<Vec<[String; 2]>> = self
            .vertices()
            .iter()
            .map(|p| p.iter().map(|x| [x.numer().to_string(), x.denom().to_string()]).collect())
            .collect();
        let pts: Vec<Vec<Value>> = pts
            .into_iter()
            .map(|p| {
                p.into_iter()
                    .map(|[n, d]| {
                        Value::Array(vec![
                            serde_json::from_str(&n).expect("integer"),
                            serde_json::from_str(&d).expect("integer"),
                        ])
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({ "dim": self.dim, "points": pts })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// Exact membership test.
    pub fn contains_point(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::ArityMismatch(v.len(), self.dim));
        }
        if let Some(h) = self.hrep.get() {
            return Ok(v.iter().all(|x| !x.is_negative()) && h.iter().all(|f| f.satisfied_by(v)));
        }
        Ok(lp::in_hull_plus_orthant(self.vertices(), v))
    }

    /// Generator points not in the hull of the others plus the orthant.
    pub fn vertices(&self) -> &[Vec<Rational>] {
        self.vertices.get_or_init(|| {
            let pts = &self.points;
            let mut keep = Vec::new();
            for (i, p) in pts.iter().enumerate() {
                let others: Vec<Vec<Rational>> =
                    pts.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
                if !lp::in_hull_plus_orthant(&others, p) {
                    keep.push(p.clone());
                }
            }
            keep
        })
    }

    /// `δ(P)`: the largest coordinate sum of a vertex.
    pub fn delta(&self) -> Rational {
        self.vertices()
            .iter()
            .map(|v| v.iter().fold(Rational::zero(), |a, x| a + x))
            .max()
            .expect("nonempty polyhedron")
    }

    pub fn scale(&self, c: &Rational) -> Result<MonoPolyhedron> {
        if !c.is_positive() {
            return Err(Error::InvalidArgument("scale factor must be positive".into()));
        }
        let pts = self.vertices().iter().map(|p| p.iter().map(|x| x * c).collect()).collect();
        MonoPolyhedron::new(self.dim, pts)
    }

    /// Equality by mutual vertex containment (recession cones agree).
    pub fn equals(&self, other: &MonoPolyhedron) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::ArityMismatch(self.dim, other.dim));
        }
        for v in self.vertices() {
            if !other.contains_point(v)? {
                return Ok(false);
            }
        }
        for v in other.vertices() {
            if !self.contains_point(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when every vertex of `other` lies in `self`.
    pub fn contains_polyhedron(&self, other: &MonoPolyhedron) -> Result<bool> {
        for v in other.vertices() {
            if !self.contains_point(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn minkowski_sum(&self, other: &MonoPolyhedron) -> Result<MonoPolyhedron> {
        if self.dim != other.dim {
            return Err(Error::ArityMismatch(self.dim, other.dim));
        }
        let mut pts = Vec::new();
        for a in self.vertices() {
            for b in other.vertices() {
                pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        MonoPolyhedron::new(self.dim, pts)
    }

    /// Convex hull of a union (plus the orthant).
    pub fn hull_union(parts: &[MonoPolyhedron]) -> Result<MonoPolyhedron> {
        let dim = parts.first().ok_or(Error::EmptyPolyhedron)?.dim;
        let mut pts = Vec::new();
        for p in parts {
            if p.dim != dim {
                return Err(Error::ArityMismatch(p.dim, dim));
            }
            pts.extend(p.vertices().iter().cloned());
        }
        MonoPolyhedron::new(dim, pts)
    }

    /// Irredundant facet inequalities (including `u_i ≥ 0` when it is a facet).
    pub fn to_halfspaces(&self) -> Result<&[Halfspace]> {
        if self.dim > HREP_DIM_CAP {
            return Err(Error::DimensionCap { dim: self.dim, cap: HREP_DIM_CAP });
        }
        if self.dim == 0 {
            return Ok(self.hrep.get_or_init(Vec::new));
        }
        Ok(self.hrep.get_or_init(|| facets(self.dim, self.vertices())))
    }

    /// Intersection, computed from the combined H-representation.
    pub fn intersect(&self, other: &MonoPolyhedron) -> Result<MonoPolyhedron> {
        if self.dim != other.dim {
            return Err(Error::ArityMismatch(self.dim, other.dim));
        }
        let r = self.dim;
        let mut cons: Vec<Halfspace> = self.to_halfspaces()?.to_vec();
        cons.extend(other.to_halfspaces()?.iter().cloned());
        for i in 0..r {
            let mut normal = vec![BigInt::zero(); r];
            normal[i] = BigInt::one();
            cons.push(Halfspace { normal, rhs: Rational::zero() });
        }
        cons.sort();
        cons.dedup();
        let mut pts = Vec::new();
        for subset in combinations(cons.len(), r) {
            let a: Vec<Vec<Rational>> = subset
                .iter()
                .map(|&k| cons[k].normal.iter().map(|c| Rational::from_integer(c.clone())).collect())
                .collect();
            let b: Vec<Rational> = subset.iter().map(|&k| cons[k].rhs.clone()).collect();
            if let Some(x) = lp::solve(&a, &b) {
                if cons.iter().all(|h| h.satisfied_by(&x)) {
                    pts.push(x);
                }
            }
        }
        MonoPolyhedron::new(r, pts)
    }

    /// Minimal generators of `{x^a : a ∈ P ∩ Z^r}`. Minimal lattice points
    /// lie in the box bounded by the vertex coordinates (rounded up).
    pub fn lattice_ideal(&self, ring: &Ring) -> Result<MonomialIdeal> {
        if ring.arity() != self.dim {
            return Err(Error::ArityMismatch(ring.arity(), self.dim));
        }
        let r = self.dim;
        let bounds: Vec<u32> = (0..r)
            .map(|i| {
                self.vertices()
                    .iter()
                    .map(|v| v[i].ceil().to_integer().to_u32().unwrap_or(u32::MAX))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let total: u64 = bounds.iter().map(|&b| b as u64 + 1).product();
        if total > 20_000_000 {
            return Err(Error::InvalidArgument(format!("lattice box of {total} points is too large")));
        }
        if r <= HREP_DIM_CAP {
            self.to_halfspaces()?;
        }
        let mut gens = Vec::new();
        let mut idx = vec![0u32; r];
        loop {
            let q: Vec<Rational> = idx.iter().map(|&e| int(e as i64)).collect();
            // Skip points dominating an already accepted one.
            let m = Monomial::from_exps(&idx);
            if !gens.iter().any(|g: &Monomial| g.divides(&m)) && self.contains_point(&q)? {
                gens.push(m);
            }
            let mut k = 0;
            loop {
                if k == r {
                    return MonomialIdeal::new(ring, gens);
                }
                idx[k] += 1;
                if idx[k] <= bounds[k] {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
}

fn parse_coordinate(v: &Value) -> Result<Rational> {
    let bad = || Error::Json(format!("invalid coordinate {v}"));
    match v {
        Value::Number(n) => Ok(Rational::from_integer(BigInt::from(n.as_i64().ok_or_else(bad)?))),
        Value::String(s) => {
            let (num, den) = s.split_once('/').unwrap_or((s.as_str(), "1"));
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        Value::Array(a) if a.len() == 2 => {
            let num = a[0].as_i64().ok_or_else(bad)?;
            let den = a[1].as_i64().ok_or_else(bad)?;
            if den == 0 {
                return Err(bad());
            }
            Ok(Rational::new(BigInt::from(num), BigInt::from(den)))
        }
        _ => Err(bad()),
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Facets through a vertex `v0` spanned by `r − 1` directions chosen among
/// vertex differences and the coordinate rays.
fn facets(r: usize, vertices: &[Vec<Rational>]) -> Vec<Halfspace> {
    let mut out: Vec<Halfspace> = Vec::new();
    for (b, v0) in vertices.iter().enumerate() {
        let mut dirs: Vec<Vec<Rational>> = Vec::new();
        for (k, v) in vertices.iter().enumerate() {
            if k != b {
                dirs.push(v.iter().zip(v0).map(|(x, y)| x - y).collect());
            }
        }
        for i in 0..r {
            let mut e = vec![Rational::zero(); r];
            e[i] = Rational::one();
            dirs.push(e);
        }
        for subset in combinations(dirs.len(), r - 1) {
            let rows: Vec<Vec<Rational>> = subset.iter().map(|&k| dirs[k].clone()).collect();
            let Some(mut a) = lp::normal_vector(&rows, r) else { continue };
            // Rays force a ≥ 0 (after orientation).
            if a.iter().all(|x| !x.is_positive()) {
                a = a.into_iter().map(|x| -x).collect();
            }
            if a.iter().any(|x| x.is_negative()) {
                continue;
            }
            let normal = primitive(&a);
            let rhs = dot_int(&normal, v0);
            let h = Halfspace { normal, rhs };
            if vertices.iter().all(|v| h.satisfied_by(v)) && !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out.sort();
    out
}

/// Summary used in reports.
#[derive(Clone, Debug, Serialize)]
pub struct PolyhedronSummary {
    pub vertices: Vec<Vec<String>>,
    pub delta: String,
}

impl MonoPolyhedron {
    pub fn summary(&self) -> PolyhedronSummary {
        PolyhedronSummary {
            vertices: self.vertices().iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect(),
            delta: self.delta().to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingSpec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ideal(r: &Ring, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r, s).unwrap()
    }

    #[test]
    fn newton_polyhedron_of_q() {
        let r = RingSpec::degrevlex(2, &["x", "y"]).unwrap();
        let np = MonoPolyhedron::newton(&ideal(&r, "x^3, y^3")).unwrap();
        assert_eq!(np.vertices().len(), 2);
        assert_eq!(np.delta(), int(3));
        assert!(np.contains_point(&[int(2), int(2)]).unwrap());
        assert!(!np.contains_point(&[int(0), int(0)]).unwrap());
        let h = np.to_halfspaces().unwrap();
        let rendered: Vec<String> = h.iter().map(|f| f.render(r.vars())).collect();
        assert_eq!(rendered, vec!["y >= 0", "x >= 0", "x + y >= 3"]);
        let with_inner = MonoPolyhedron::newton(&ideal(&r, "x^3, y^3, x^2*y^2")).unwrap();
        assert!(with_inner.equals(&np).unwrap());
        let three = MonoPolyhedron::newton(&ideal(&r, "x^3, y^3, x*y")).unwrap();
        assert_eq!(three.vertices().len(), 3);
        let sq = MonoPolyhedron::newton(&ideal(&r, "x^2, y^2")).unwrap();
        assert!(sq.contains_point(&[int(1), int(1)]).unwrap());
    }

    #[test]
    fn scaling_and_sums() {
        let r = RingSpec::degrevlex(2, &["x", "y"]).unwrap();
        let q1 = MonoPolyhedron::newton(&ideal(&r, "x^3, y^3")).unwrap();
        let q2 = MonoPolyhedron::newton(&ideal(&r, "x^3, y^3").power(2).unwrap()).unwrap();
        assert!(q2.scale(&q(1, 2)).unwrap().equals(&q1).unwrap());
        assert!(q1.minkowski_sum(&q1).unwrap().equals(&q2).unwrap());
        assert!(q1.intersect(&q1).unwrap().equals(&q1).unwrap());
    }

    #[test]
    fn symbolic_polyhedron_of_the_triangle() {
        let r = RingSpec::degrevlex(2, &["x", "y", "z"]).unwrap();
        let parts: Vec<MonoPolyhedron> =
            ["x, y", "x, z", "y, z"].iter().map(|s| MonoPolyhedron::newton(&ideal(&r, s)).unwrap()).collect();
        let sp = parts[0].intersect(&parts[1]).unwrap().intersect(&parts[2]).unwrap();
        let half = q(1, 2);
        assert!(sp.vertices().contains(&vec![half.clone(), half.clone(), half]));
        assert_eq!(sp.vertices().len(), 4);
        assert_eq!(sp.delta(), int(2));
    }

    #[test]
    fn integral_closures() {
        let r = RingSpec::degrevlex(2, &["x", "y"]).unwrap();
        assert_eq!(ideal(&r, "x^2, y^2").integral_closure().unwrap(), ideal(&r, "x^2, x*y, y^2"));
        assert_eq!(ideal(&r, "x^3, y^3").integral_closure().unwrap(), ideal(&r, "x^3, x^2*y, x*y^2, y^3"));
    }

    #[test]
    fn json() {
        let p = MonoPolyhedron::from_json(r#"{"dim": 2, "points": [[3, 0], ["0", "3/1"], [[5,2],[5,2]]]}"#).unwrap();
        assert_eq!(p.vertices().len(), 2);
        let back = MonoPolyhedron::from_json(&p.to_json_value().to_string()).unwrap();
        assert!(back.equals(&p).unwrap());
        assert!(MonoPolyhedron::from_json(r#"{"dim": 2, "points": [[1, -1]]}"#).is_err());
        assert!(MonoPolyhedron::from_json(r#"{"dim": 2, "points": []}"#).is_err());
    }

    #[test]
    fn dimension_cap() {
        let p = MonoPolyhedron::from_integer_points(5, &[vec![1, 0, 0, 0, 0]]).unwrap();
        assert!(matches!(p.to_halfspaces(), Err(Error::DimensionCap { dim: 5, cap: 4 })));
    }
}
