//! The 2x2x2 hyperdeterminant on principal-minor cubes and the identity chain
//! among the `S`/`T` coordinates of `Gr(3,6)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extalg::vector::sort_sign;
use crate::extalg::ExtVector;
use crate::grassmann::lagrange::subset_label;
use crate::grassmann::reduce::f_index;
use crate::grassmann::LagrangeCoefficients;
use crate::kernel::{Rat, Ring};
use crate::residual::Residual;

/// Eight values indexed by `S ⊆ {1,2,3}`, stored at bitmask `Σ_{s∈S} 2^{s-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinorCube<R = Rat> {
    pub values: [R; 8],
}

/// The complementary pairs `(S, S^c)`, in the order `∅|123, 1|23, 2|13, 3|12`.
const PAIRS: [(usize, usize); 4] = [(0, 7), (1, 6), (2, 5), (4, 3)];

impl<R: Ring> MinorCube<R> {
    pub fn get(&self, s: &[usize]) -> &R {
        &self.values[s.iter().fold(0, |m, &x| m | 1 << (x - 1))]
    }
}

/// Cayley's hyperdeterminant in the form
/// `Σ c_S² c_{S^c}² - 2 Σ (c_S c_{S^c})(c_T c_{T^c}) + 4 (c_∅ c_12 c_13 c_23 + c_1 c_2 c_3 c_123)`.
pub fn cayley222<R: Ring>(c: &MinorCube<R>) -> R {
    let v = &c.values;
    let prods: Vec<R> = PAIRS.iter().map(|&(a, b)| v[a].clone() * &v[b]).collect();
    let mut acc = v[0].zero_like();
    for p in &prods {
        acc = acc + &(p.clone() * p);
    }
    for a in 0..4 {
        for b in a + 1..4 {
            let q = prods[a].clone() * &prods[b];
            acc = acc - &(q.clone() + &q);
        }
    }
    let quart = v[0].clone() * &v[3] * &v[5] * &v[6] + &(v[1].clone() * &v[2] * &v[4] * &v[7]);
    acc + &quart.scale(&Rat::from_int(4))
}

/// `cayley222` of the cube `S ↦ L_{J ∪ {j_s : s ∈ S}}`.
pub fn core_residual(l: &LagrangeCoefficients, j: &[usize], triple: [usize; 3]) -> Result<Rat> {
    let mut all: Vec<usize> = j.iter().copied().chain(triple).collect();
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) || all.iter().any(|&x| x == 0 || x > l.n) {
        return Err(Error::InvalidArgument(format!("J = {j:?} and triple {triple:?} must be disjoint subsets of 1..{}", l.n)));
    }
    let values = std::array::from_fn(|mask| {
        let mut set: Vec<usize> = j.to_vec();
        set.extend((0..3).filter(|b| mask & (1 << b) != 0).map(|b| triple[b]));
        set.sort_unstable();
        l.get(&set)
    });
    Ok(cayley222(&MinorCube { values }))
}

/// Every `(J, triple)` instance for an `N`-element index set.
pub fn core_instances(n: usize) -> Vec<(Vec<usize>, [usize; 3])> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                let rest: Vec<usize> = (1..=n).filter(|&x| x != a && x != b && x != c).collect();
                for mask in 0u32..1 << rest.len() {
                    let j = rest.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &x)| x).collect();
                    out.push((j, [a, b, c]));
                }
            }
        }
    }
    out
}

pub fn core_residuals(l: &LagrangeCoefficients) -> Vec<Residual> {
    core_instances(l.n)
        .into_iter()
        .map(|(j, t)| {
            let r = core_residual(l, &j, t).expect("valid instance");
            Residual::new(format!("core J={} triple={}{}{}", subset_label(&j), t[0], t[1], t[2]), r)
        })
        .collect()
}

/// The `S` and `T` coordinates of a point of `Λ^3(C^6)`; `s[0..4] = S_0..S_3`,
/// `ss` the starred `S`, `t[0..3] = T_1..T_3`, `ts` the starred `T`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Gr36Coords<R = Rat> {
    pub s: [R; 4],
    pub ss: [R; 4],
    pub t: [R; 3],
    pub ts: [R; 3],
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Gr36Extraction {
    pub coords: Gr36Coords,
    /// The second reading of each `T` minus the first.
    pub consistency: Vec<Residual>,
}

/// Coefficient of `f_a ∧ f_b ∧ f_c`, labels `(i, starred)`.
fn ftilde(v: &ExtVector, labels: [(usize, bool); 3]) -> Rat {
    let mut idx = Vec::with_capacity(3);
    let mut c = Rat::one();
    for (i, s) in labels {
        let (e, sg) = f_index(i, s);
        idx.push(e);
        c *= sg;
    }
    match sort_sign(&mut idx) {
        None => Rat::zero(),
        Some(neg) => {
            let x = v.coeff(&idx) * c;
            if neg {
                -x
            } else {
                x
            }
        }
    }
}

const U: bool = false;
const S: bool = true;

pub fn gr36_coords(v: &ExtVector) -> Result<Gr36Extraction> {
    if v.n() != 3 || !v.is_homogeneous(3) {
        return Err(Error::InvalidArgument("expected a degree-3 element of Λ(C^6)".into()));
    }
    let f = |l: [(usize, bool); 3]| ftilde(v, l);
    let s = [f([(1, U), (2, U), (3, U)]), f([(2, U), (3, U), (1, S)]), -f([(1, U), (3, U), (2, S)]), f([(1, U), (2, U), (3, S)])];
    let ss = [f([(1, S), (2, S), (3, S)]), f([(1, U), (2, S), (3, S)]), -f([(2, U), (1, S), (3, S)]), f([(3, U), (1, S), (2, S)])];
    let pairs_t = [
        (f([(1, U), (2, U), (2, S)]), -f([(1, U), (3, U), (3, S)])),
        (f([(2, U), (3, U), (3, S)]), f([(1, U), (2, U), (1, S)])),
        (f([(2, U), (3, U), (2, S)]), -f([(1, U), (3, U), (1, S)])),
    ];
    let pairs_ts = [
        (f([(2, U), (1, S), (2, S)]), -f([(3, U), (1, S), (3, S)])),
        (f([(3, U), (2, S), (3, S)]), f([(1, U), (1, S), (2, S)])),
        (-f([(1, U), (1, S), (3, S)]), f([(2, U), (2, S), (3, S)])),
    ];
    let mut consistency = Vec::new();
    for (k, (a, b)) in pairs_t.iter().enumerate() {
        consistency.push(Residual::new(format!("T{}", k + 1), b - a));
    }
    for (k, (a, b)) in pairs_ts.iter().enumerate() {
        consistency.push(Residual::new(format!("T{}*", k + 1), b - a));
    }
    let t = pairs_t.map(|(a, _)| a);
    let ts = pairs_ts.map(|(a, _)| a);
    Ok(Gr36Extraction { coords: Gr36Coords { s, ss, t, ts }, consistency })
}

impl<R: Ring> Gr36Coords<R> {
    /// The symmetric-coordinate cube: `S_0 = L_∅`, `S_k = L_k`, `S_{k*} = L_{complement of k}`, `S_{0*} = L_123`.
    pub fn cube(&self) -> MinorCube<R> {
        let (s, ss) = (&self.s, &self.ss);
        MinorCube {
            values: [
                s[0].clone(),
                s[1].clone(),
                s[2].clone(),
                ss[3].clone(),
                s[3].clone(),
                ss[2].clone(),
                ss[1].clone(),
                ss[0].clone(),
            ],
        }
    }
}

/// Residuals (left minus right) of the short, long and hexahedron relations and
/// of the hyperdeterminant, in that order.
pub fn identity_chain<R: Ring>(g: &Gr36Coords<R>) -> Vec<(String, R)> {
    let (s, ss, t, ts) = (&g.s, &g.ss, &g.t, &g.ts);
    let m = |a: &R, b: &R| a.clone() * b;
    let mut out = Vec::new();
    let triples = [(1, 2, 3), (2, 1, 3), (3, 1, 2)];
    for &(k, p, q) in &triples {
        let r = m(&t[k - 1], &t[k - 1]) + &m(&s[0], &ss[k]) - m(&s[p], &s[q]);
        out.push((format!("short{k}"), r));
    }
    for &(k, p, q) in &triples {
        let r = m(&ts[k - 1], &ts[k - 1]) + &m(&ss[0], &s[k]) - m(&ss[p], &ss[q]);
        out.push((format!("short{k}*"), r));
    }
    let ssum = |signs: [i64; 3]| {
        let mut acc = m(&s[0], &ss[0]);
        for (i, sg) in signs.iter().enumerate() {
            let x = m(&s[i + 1], &ss[i + 1]);
            acc = if *sg > 0 { acc + &x } else { acc - &x };
        }
        acc
    };
    for (k, signs) in [[1, -1, -1], [-1, 1, -1], [-1, -1, 1]].into_iter().enumerate() {
        let lhs = m(&t[k], &ts[k]);
        out.push((format!("long{}", k + 1), lhs.clone() + &lhs - ssum(signs)));
    }
    let tt = m(&t[0], &t[1]) * &t[2] - m(&s[1], &s[2]) * &s[3];
    let tts = m(&ts[0], &ts[1]) * &ts[2] - m(&ss[1], &ss[2]) * &ss[3];
    for k in 0..3 {
        let inner = m(&t[k], &ts[k]) - m(&s[k + 1], &ss[k + 1]);
        out.push((format!("hexahedron{}", k + 1), m(&s[0], &inner) - tt.clone()));
    }
    for k in 0..3 {
        let inner = m(&t[k], &ts[k]) - m(&s[k + 1], &ss[k + 1]);
        out.push((format!("hexahedron{}*", k + 1), m(&ss[0], &inner) - tts.clone()));
    }
    out.push(("hyperdet".to_string(), cayley222(&g.cube())));
    out
}

pub fn identity_chain_residuals(g: &Gr36Coords) -> Vec<Residual> {
    identity_chain(g).into_iter().map(|(k, v)| Residual::new(k, v)).collect()
}

impl Serialize for MinorCube {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut l = BTreeMap::new();
        for mask in 0..8usize {
            let set: Vec<usize> = (1..=3).filter(|x| mask & (1 << (x - 1)) != 0).collect();
            l.insert(subset_label(&set), self.values[mask].clone());
        }
        let mut wrap = BTreeMap::new();
        wrap.insert("L", l);
        wrap.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MinorCube {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wrap {
            #[serde(rename = "L")]
            l: BTreeMap<String, Rat>,
        }
        let w = Wrap::deserialize(d)?;
        let mut values: [Rat; 8] = Default::default();
        let mut seen = [false; 8];
        for (k, v) in w.l {
            let mut mask = 0;
            for ch in k.chars() {
                let b = match ch {
                    '1' => 1,
                    '2' => 2,
                    '3' => 4,
                    _ => return Err(serde::de::Error::custom(format!("bad subset label {k:?}"))),
                };
                if mask & b != 0 {
                    return Err(serde::de::Error::custom(format!("repeated index in {k:?}")));
                }
                mask |= b;
            }
            values[mask] = v;
            seen[mask] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(serde::de::Error::custom("all eight subsets of 123 are required"));
        }
        Ok(MinorCube { values })
    }
}
