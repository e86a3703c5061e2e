//! Explicit generator constructions for permutation groups of the
//! degree-28 and degree-126 two-transitive actions used by the
//! non-existence arguments.
//!
//! The unitary groups act on the isotropic points of a Hermitian form:
//! generators are special unitary matrices (two unipotent root elements, a
//! Weyl reflection, and a torus element), reduced to permutations of the
//! q^3 + 1 unital points.  Scalars act trivially there, so the image is
//! the projective special unitary group; a stabilizer chain certifies the
//! order (6048 at degree 28, 126000 at degree 126).
//!
//! The degree-28 Ree group is realized as the conjugation action of the
//! semilinear projective line group over F_8 on the 28 Sylow 3-subgroups
//! of its socle, again certified by order (1512) and 2-transitivity.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groups::haut::GroupGens;
use crate::groups::perm::Perm;
use crate::groups::schreier::StabilizerChain;
use crate::groups::subsets::is_t_transitive;
use crate::zoo::ff::SmallField;
use crate::zoo::gqr::psl2_generators;
use crate::zoo::unital::HermitianUnital;

type Mat = [[u16; 3]; 3];

fn mat_apply(f: &SmallField, a: &Mat, p: &[u16; 3]) -> [u16; 3] {
    let mut out = [0u16; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i] = f.add(out[i], f.mul(a[i][j], p[j]));
        }
    }
    out
}

fn normalize(f: &SmallField, p: &[u16; 3]) -> [u16; 3] {
    let lead = p.iter().copied().find(|&x| x != 0).expect("projective point is nonzero");
    let s = f.inv(lead);
    [f.mul(s, p[0]), f.mul(s, p[1]), f.mul(s, p[2])]
}

fn det(f: &SmallField, a: &Mat) -> u16 {
    let minor =
        |r0: usize, r1: usize, c0: usize, c1: usize| f.sub(f.mul(a[r0][c0], a[r1][c1]), f.mul(a[r0][c1], a[r1][c0]));
    let mut d = f.mul(a[0][0], minor(1, 2, 1, 2));
    d = f.sub(d, f.mul(a[0][1], minor(1, 2, 0, 2)));
    f.add(d, f.mul(a[0][2], minor(1, 2, 0, 1)))
}

/// The Hermitian form x0 conj(y2) + x1 conj(y1) + x2 conj(y0).
fn form(f: &SmallField, x: &[u16; 3], y: &[u16; 3]) -> u16 {
    let mut acc = f.mul(x[0], f.conjugate(y[2]));
    acc = f.add(acc, f.mul(x[1], f.conjugate(y[1])));
    f.add(acc, f.mul(x[2], f.conjugate(y[0])))
}

fn check_special_unitary(f: &SmallField, a: &Mat) -> Result<()> {
    if det(f, a) != 1 {
        return Err(Error::Construction("generator is not special".into()));
    }
    let cols: Vec<[u16; 3]> = (0..3)
        .map(|j| [a[0][j], a[1][j], a[2][j]])
        .collect();
    let e: [[u16; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for i in 0..3 {
        for j in 0..3 {
            if form(f, &cols[i], &cols[j]) != form(f, &e[i], &e[j]) {
                return Err(Error::Construction("generator does not preserve the form".into()));
            }
        }
    }
    Ok(())
}

/// A root element [[1, a, b], [0, 1, -conj(a)], [0, 0, 1]]: unitary
/// exactly when b + conj(b) + a conj(a) = 0, and b exists for every a.
fn root_element(f: &SmallField, a: u16) -> Result<Mat> {
    let target = f.neg(f.mul(a, f.conjugate(a)));
    let b = f
        .elements()
        .find(|&b| f.add(b, f.conjugate(b)) == target)
        .ok_or_else(|| Error::Construction("no trace solution for a root element".into()))?;
    Ok([[1, a, b], [0, 1, f.neg(f.conjugate(a))], [0, 0, 1]])
}

/// The projective special unitary group of the unital over F_{q^2}, as
/// permutations of its q^3 + 1 points in unital order.
pub fn psu3_unital(q: u16) -> Result<GroupGens> {
    let unital = HermitianUnital::new(q)?;
    let f = &unital.field;
    let omega = f.generator();
    let torus = [
        [omega, 0, 0],
        [0, f.pow(omega, q as u64 - 1), 0],
        [0, 0, f.inv(f.pow(omega, q as u64))],
    ];
    let weyl = [[0, 0, 1], [0, f.neg(1), 0], [1, 0, 0]];
    let mats = [root_element(f, 1)?, root_element(f, omega)?, weyl, torus];

    let n = unital.unital.len();
    let mut plane_index: HashMap<[u16; 3], usize> = HashMap::new();
    for (i, p) in unital.plane_points.iter().enumerate() {
        plane_index.insert(*p, i);
    }
    let mut unital_pos = vec![usize::MAX; unital.plane_points.len()];
    for (k, &i) in unital.unital.iter().enumerate() {
        unital_pos[i] = k;
    }
    let mut perms = Vec::new();
    for mat in &mats {
        check_special_unitary(f, mat)?;
        let mut images = vec![0usize; n];
        for (k, &i) in unital.unital.iter().enumerate() {
            let image = normalize(f, &mat_apply(f, mat, &unital.plane_points[i]));
            let j = plane_index[&image];
            if unital_pos[j] == usize::MAX {
                return Err(Error::Construction("isotropic point left the unital".into()));
            }
            images[k] = unital_pos[j];
        }
        perms.push(Perm::new(images)?);
    }
    let expected: u128 = match q {
        3 => 6048,
        5 => 126000,
        _ => return Err(Error::Construction(format!("unsupported unital order {q}"))),
    };
    let chain = StabilizerChain::new(n, &perms, &[])?;
    if chain.order() != expected {
        return Err(Error::Construction(format!(
            "unitary group on {n} points has order {}, expected {expected}",
            chain.order()
        )));
    }
    GroupGens::from_perms(n, format!("PSU3({q})@{n}"), perms)
}

/// Canonical key of the cyclic group generated by a permutation: the
/// sorted image tables of its powers.
fn cyclic_subgroup_key(g: &Perm) -> Vec<Vec<usize>> {
    let mut key = Vec::new();
    let mut h = Perm::identity(g.degree());
    loop {
        key.push(h.images().to_vec());
        h = h.then(g);
        if h.is_identity() {
            break;
        }
    }
    key.sort();
    key
}

/// The degree-28 Ree group: the full semilinear projective line group
/// over F_8 acting by conjugation on the 28 Sylow 3-subgroups of its
/// socle.
pub fn ree3_sylow() -> Result<GroupGens> {
    let field = SmallField::new(8)?;
    let line_gens = psl2_generators(&field)?;
    // Close the socle under multiplication: 504 permutations of the line.
    let mut elements: Vec<Perm> = vec![Perm::identity(9)];
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    seen.insert(elements[0].images().to_vec(), ());
    let mut frontier = elements.clone();
    while let Some(g) = frontier.pop() {
        for h in &line_gens {
            let next = g.then(h);
            if seen.insert(next.images().to_vec(), ()).is_none() {
                elements.push(next.clone());
                frontier.push(next);
            }
        }
    }
    if elements.len() != 504 {
        return Err(Error::Construction(format!(
            "projective line group over F_8 has {} elements, expected 504",
            elements.len()
        )));
    }
    let mut sylows: Vec<Vec<Vec<usize>>> = elements
        .iter()
        .filter(|g| g.order() == 9)
        .map(cyclic_subgroup_key)
        .collect();
    sylows.sort();
    sylows.dedup();
    if sylows.len() != 28 {
        return Err(Error::Construction(format!(
            "found {} Sylow 3-subgroups, expected 28",
            sylows.len()
        )));
    }
    let index: HashMap<Vec<Vec<usize>>, usize> =
        sylows.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();

    // Pick one generator per subgroup (the first listed non-identity
    // element generates: the subgroups are cyclic of prime-power order 9,
    // and every non-identity element of order 9 generates; order-3
    // elements sort among the powers, so take any element of order 9).
    let generators_of: Vec<Perm> = sylows
        .iter()
        .map(|key| {
            key.iter()
                .map(|imgs| Perm::new(imgs.clone()).expect("stored image table is a permutation"))
                .find(|p| p.order() == 9)
                .expect("a Sylow 3-subgroup of order 9 has a generator")
        })
        .collect();

    let frobenius = {
        let mut images = vec![0usize; 9];
        for x in 0..8u16 {
            images[x as usize] = field.frobenius(x) as usize;
        }
        images[8] = 8;
        Perm::new(images)?
    };
    let mut acting = line_gens;
    acting.push(frobenius);
    let mut perms = Vec::new();
    for h in &acting {
        let inv = h.inverse();
        let mut images = vec![0usize; 28];
        for (i, g) in generators_of.iter().enumerate() {
            let conjugate = inv.then(g).then(h);
            images[i] = index[&cyclic_subgroup_key(&conjugate)];
        }
        perms.push(Perm::new(images)?);
    }
    let chain = StabilizerChain::new(28, &perms, &[])?;
    if chain.order() != 1512 {
        return Err(Error::Construction(format!(
            "Ree group at degree 28 has order {}, expected 1512",
            chain.order()
        )));
    }
    let gens = GroupGens::from_perms(28, "Ree3@28", perms)?;
    if !is_t_transitive(&gens, 2)? {
        return Err(Error::Construction("Ree group at degree 28 is not 2-transitive".into()));
    }
    Ok(gens)
}
