//! Weyl group action in Dynkin-label coordinates.
//!
//! Group elements are represented by their image of the Weyl vector; the
//! orbit of `rho` is regular, so this labelling is faithful. Lengths are the
//! breadth-first depths from the identity.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::rootsystem::RootSystem;
use crate::weight::Weight;

/// Enumeration limit used when none is given. Large enough for `E_7`;
/// `E_8` is refused.
pub const DEFAULT_MAX_ORDER: u64 = 3_000_000;

/// `s_i(w) = w - w_i alpha_i`.
pub fn simple_reflection(rs: &RootSystem, i: usize, w: &Weight) -> Weight {
    let li = w.labels()[i];
    if li == 0 {
        return w.clone();
    }
    let labels = w.labels().iter().zip(rs.cartan()).map(|(&x, row)| x - li * row[i]).collect();
    Weight::new(labels)
}

/// Weyl orbit of `w`, by closure under simple reflections.
pub fn orbit(rs: &RootSystem, w: &Weight) -> BTreeSet<Weight> {
    let mut seen = BTreeSet::new();
    seen.insert(w.clone());
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(v) = queue.pop_front() {
        for i in 0..rs.rank() {
            if v.labels()[i] != 0 {
                let u = simple_reflection(rs, i, &v);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
    }
    seen
}

pub fn orbit_size(rs: &RootSystem, w: &Weight) -> usize {
    orbit(rs, w).len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    /// `w(rho)`.
    pub image_of_rho: Weight,
    pub length: u32,
}

impl GroupElement {
    /// `(-1)^length`.
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Shifted action on zero, `w . 0 = w(rho) - rho`.
    pub fn shift(&self) -> Weight {
        Weight::new(self.image_of_rho.labels().iter().map(|x| x - 1).collect())
    }
}

/// All elements of the Weyl group with their lengths.
#[derive(Clone, Debug)]
pub struct GroupTable {
    elements: Vec<GroupElement>,
}

impl GroupTable {
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Length of the longest element.
    pub fn max_length(&self) -> u32 {
        self.elements.iter().map(|e| e.length).max().unwrap_or(0)
    }
}

/// Breadth-first enumeration of the regular orbit of `rho`.
///
/// Refuses (with the exact order) when the classical group order exceeds
/// `max_order`.
pub fn enumerate_group(rs: &RootSystem, max_order: u64) -> Result<GroupTable> {
    let order = rs.lie_type().weyl_group_order();
    if order > max_order {
        return Err(Error::GroupTooLarge { order, max: max_order });
    }
    let rho = rs.rho();
    let mut index = HashSet::with_capacity(order as usize);
    index.insert(rho.clone());
    let mut elements = vec![GroupElement { image_of_rho: rho, length: 0 }];
    let mut head = 0;
    while head < elements.len() {
        let (img, len) = (elements[head].image_of_rho.clone(), elements[head].length);
        for i in 0..rs.rank() {
            let next = simple_reflection(rs, i, &img);
            if index.insert(next.clone()) {
                elements.push(GroupElement { image_of_rho: next, length: len + 1 });
            }
        }
        head += 1;
    }
    Ok(GroupTable { elements })
}

/// `(w(v), length(w))` for every group element `w`, in the order of
/// [`enumerate_group`].
pub fn weyl_images(rs: &RootSystem, v: &Weight, max_order: u64) -> Result<Vec<(Weight, u32)>> {
    let order = rs.lie_type().weyl_group_order();
    if order > max_order {
        return Err(Error::GroupTooLarge { order, max: max_order });
    }
    let rho = rs.rho();
    let mut seen = HashSet::with_capacity(order as usize);
    seen.insert(rho.clone());
    let mut queue = vec![(rho, v.clone(), 0u32)];
    let mut head = 0;
    while head < queue.len() {
        let (img, x, len) = queue[head].clone();
        for i in 0..rs.rank() {
            let next = simple_reflection(rs, i, &img);
            if seen.insert(next.clone()) {
                queue.push((next, simple_reflection(rs, i, &x), len + 1));
            }
        }
        head += 1;
    }
    Ok(queue.into_iter().map(|(_, x, len)| (x, len)).collect())
}

/// Move `w` into the dominant chamber by reflecting at negative labels.
///
/// Returns the dominant representative and `(-1)^(reflections applied)`. The
/// parity is only meaningful when `w` is regular; see [`shifted_resolve`].
pub fn dominantize(rs: &RootSystem, w: &Weight) -> (Weight, i64) {
    let mut v = w.clone();
    let mut sign = 1;
    while let Some(i) = v.labels().iter().position(|&l| l < 0) {
        v = simple_reflection(rs, i, &v);
        sign = -sign;
    }
    (v, sign)
}

/// How an auxiliary character `ch_lambda` resolves for an integral weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuxResolution {
    /// `lambda + rho` lies on a reflecting wall; the character is zero.
    Zero,
    /// `ch_lambda = sign * ch_dominant`.
    Signed { sign: i64, dominant: Weight },
}

/// Resolve `lambda` under the shifted action `w . lambda = w(lambda + rho) - rho`.
pub fn shifted_resolve(rs: &RootSystem, lambda: &Weight) -> AuxResolution {
    let rho = rs.rho();
    let mut v = lambda + &rho;
    let mut sign = 1;
    loop {
        if v.labels().contains(&0) {
            return AuxResolution::Zero;
        }
        match v.labels().iter().position(|&l| l < 0) {
            Some(i) => {
                v = simple_reflection(rs, i, &v);
                sign = -sign;
            }
            None => return AuxResolution::Signed { sign, dominant: &v - &rho },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_token(t).unwrap()
    }

    fn w<const N: usize>(l: [i64; N]) -> Weight {
        Weight::from(l)
    }

    #[test]
    fn simple_reflection_examples() {
        assert_eq!(simple_reflection(&rs("A2"), 0, &w([1, 0])), w([-1, 1]));
        assert_eq!(simple_reflection(&rs("G2"), 0, &w([1, 1])), w([-1, 4]));
        assert_eq!(simple_reflection(&rs("B3"), 1, &w([3, 0, 2])), w([3, 0, 2]));
    }

    #[test]
    fn orbit_examples() {
        let a2 = rs("A2");
        let o = orbit(&a2, &w([1, 0]));
        assert_eq!(o, [w([1, 0]), w([-1, 1]), w([0, -1])].into_iter().collect());
        assert_eq!(orbit_size(&rs("G2"), &w([1, 1])), 12);
        assert_eq!(orbit_size(&rs("G2"), &w([1, 0])), 6);
        assert_eq!(orbit_size(&rs("E6"), &Weight::zero(6)), 1);
    }

    #[test]
    fn group_orders() {
        for (t, n) in [("A2", 6), ("G2", 12), ("F4", 1152), ("B3", 48), ("D4", 192), ("A1", 2)] {
            let rs = rs(t);
            let g = enumerate_group(&rs, DEFAULT_MAX_ORDER).unwrap();
            assert_eq!(g.order(), n, "{t}");
            assert_eq!(g.elements().iter().filter(|e| e.length == 0).count(), 1);
            assert_eq!(g.max_length() as usize, rs.positive_roots().len(), "{t}");
            assert_eq!(orbit_size(&rs, &rs.rho()), n);
        }
    }

    #[test]
    fn e8_is_refused() {
        match enumerate_group(&rs("E8"), DEFAULT_MAX_ORDER) {
            Err(Error::GroupTooLarge { order, .. }) => assert_eq!(order, 696_729_600),
            other => panic!("unexpected {other:?}"),
        }
        assert!(enumerate_group(&rs("G2"), 11).is_err());
    }

    #[test]
    fn dominantize_examples() {
        assert_eq!(dominantize(&rs("A2"), &w([0, -1])), (w([1, 0]), 1));
        assert_eq!(dominantize(&rs("G2"), &w([-1, 4])), (w([1, 1]), -1));
        assert_eq!(dominantize(&rs("C3"), &w([1, 0, 2])), (w([1, 0, 2]), 1));
    }

    #[test]
    fn shifted_resolve_g2_examples() {
        let g2 = rs("G2");
        assert_eq!(shifted_resolve(&g2, &w([3, -6])), AuxResolution::Signed { sign: 1, dominant: w([0, 1]) });
        assert_eq!(shifted_resolve(&g2, &w([-4, 4])), AuxResolution::Signed { sign: -1, dominant: w([0, 0]) });
        assert_eq!(shifted_resolve(&g2, &w([-3, 1])), AuxResolution::Zero);
    }

    #[test]
    fn dominant_weights_resolve_to_themselves() {
        let b3 = rs("B3");
        for l in [[0, 0, 0], [1, 2, 0], [4, 0, 1]] {
            assert_eq!(shifted_resolve(&b3, &w(l)), AuxResolution::Signed { sign: 1, dominant: w(l) });
        }
    }

    #[test]
    fn images_follow_group_order() {
        let g2 = rs("G2");
        let g = enumerate_group(&g2, DEFAULT_MAX_ORDER).unwrap();
        let imgs = weyl_images(&g2, &g2.rho(), DEFAULT_MAX_ORDER).unwrap();
        for (e, (x, len)) in g.elements().iter().zip(&imgs) {
            assert_eq!((&e.image_of_rho, e.length), (x, *len));
        }
        let o: BTreeSet<Weight> =
            weyl_images(&g2, &w([1, 0]), DEFAULT_MAX_ORDER).unwrap().into_iter().map(|p| p.0).collect();
        assert_eq!(o, orbit(&g2, &w([1, 0])));
    }

    #[test]
    fn reflections_are_involutions() {
        let f4 = rs("F4");
        let v = w([3, -2, 5, -7]);
        for i in 0..4 {
            assert_eq!(simple_reflection(&f4, i, &simple_reflection(&f4, i, &v)), v);
        }
    }
}
