use num_traits::{One, Zero};

use crate::exact::{Matrix, Rational};
use crate::poset::FinitePoset;
use crate::semigroup::{FiniteSemigroup, GreenData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NicoData {
    /// Per J-class: 0 two-sided identity, 1 one-sided only, 2 neither.
    pub sigma: Vec<u8>,
    /// Largest σ-sum along a maximal chain of J-classes.
    pub bound: usize,
    /// Number of J-classes on a longest chain.
    pub longest_chain: usize,
}

/// Solvability of `u·y = y` (left) or `y·u = y` (right) for all `y` in the
/// contracted algebra on the J-class, where products leaving it vanish.
fn identity_system(s: &FiniteSemigroup, class: &[usize], left: bool) -> (Matrix<Rational>, Vec<Rational>) {
    let k = class.len();
    let pos = |z: usize| class.binary_search(&z).ok();
    // unknown c_x; equation (y, z): Σ_x c_x [x∘y = z] = δ_{yz}
    let mut m = Matrix::zeros(k * k, k);
    let mut rhs = vec![Rational::zero(); k * k];
    for (yi, &y) in class.iter().enumerate() {
        rhs[yi * k + yi] = Rational::one();
        for (xi, &x) in class.iter().enumerate() {
            let p = if left { s.mul(x, y) } else { s.mul(y, x) };
            if let Some(zi) = pos(p) {
                m[(yi * k + zi, xi)] += Rational::one();
            }
        }
    }
    (m, rhs)
}

pub fn nico_sigma(s: &FiniteSemigroup, green: &GreenData, j: usize) -> u8 {
    let class = &green.j.classes[j];
    let (lm, lr) = identity_system(s, class, true);
    let (rm, rr) = identity_system(s, class, false);
    let left = lm.solve(&lr).is_some();
    let right = rm.solve(&rr).is_some();
    if left && right {
        // a left and a right identity coincide
        0
    } else if left || right {
        1
    } else {
        2
    }
}

pub fn nico_bound(s: &FiniteSemigroup, green: &GreenData) -> NicoData {
    let sigma: Vec<u8> = (0..green.num_j_classes()).map(|j| nico_sigma(s, green, j)).collect();
    let poset = FinitePoset::from_green(green);
    let chains = poset.maximal_chains();
    let bound = chains
        .iter()
        .map(|c| c.iter().map(|&j| sigma[j] as usize).sum())
        .max()
        .unwrap_or(0);
    let longest_chain = chains.iter().map(Vec::len).max().unwrap_or(0);
    NicoData {
        sigma,
        bound,
        longest_chain,
    }
}
