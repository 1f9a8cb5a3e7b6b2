use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;

use super::bar::{add_term, contract, unit_chain, BarChain};
use super::resolution::FreeResolution;
use crate::error::{Error, Result};

/// Default limit on the number of terms in one comparison-map chain.
pub const DEFAULT_CHAIN_TERMS: usize = 2_000_000;

/// Chain maps between a free resolution `F` and the normalized bar
/// resolution, used to transport Alexander–Whitney products to `F`.
///
/// `ψ : F → Bar` is built with the bar contracting homotopy; `φ : Bar → F`
/// is solved cell by cell on demand and cached.
#[derive(Debug)]
pub struct Comparison<'r> {
    res: &'r FreeResolution,
    psi: Vec<Vec<BarChain>>,
    phi: Mutex<HashMap<Vec<usize>, Vec<BigInt>>>,
    max_terms: usize,
}

impl<'r> Comparison<'r> {
    pub fn new(res: &'r FreeResolution, max_terms: usize) -> Self {
        Comparison {
            res,
            psi: vec![vec![unit_chain()]],
            phi: Mutex::new(HashMap::new()),
            max_terms,
        }
    }

    /// `ψ(e_j)` for the generators of `F_d`.
    pub fn psi(&mut self, d: usize) -> Result<&[BarChain]> {
        while self.psi.len() <= d {
            let e = self.psi.len();
            let order = self.res.group().order();
            let mut next = Vec::with_capacity(self.res.rank(e));
            for j in 0..self.res.rank(e) {
                let mut image = BarChain::new();
                for (idx, c) in self.res.boundary(e, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (i, h) = (idx / order, idx % order);
                    for ((g, cell), x) in &self.psi[e - 1][i] {
                        let key = (self.res.group().mul(h, *g), cell.clone());
                        add_term(&mut image, key, c * x);
                    }
                    if image.len() > self.max_terms {
                        return Err(Error::Capacity {
                            what: format!("comparison chain in degree {e}"),
                            size: image.len(),
                            limit: self.max_terms,
                        });
                    }
                }
                next.push(contract(&image));
            }
            self.psi.push(next);
        }
        Ok(&self.psi[d])
    }

    /// `φ([g_1|…|g_n]) ∈ F_n` for a non-degenerate cell.
    pub fn phi(&self, cell: &[usize]) -> Result<Vec<BigInt>> {
        if let Some(v) = self.phi.lock().expect("phi cache").get(cell) {
            return Ok(v.clone());
        }
        let n = cell.len();
        let group = self.res.group();
        let v = if n == 0 {
            self.res.basis_vector(0, 0, 0)
        } else {
            let mut target = self.res.translate(cell[0], &self.phi(&cell[1..])?);
            for i in 1..n {
                let prod = group.mul(cell[i - 1], cell[i]);
                if prod == 0 {
                    continue;
                }
                let mut merged = cell[..i - 1].to_vec();
                merged.push(prod);
                merged.extend_from_slice(&cell[i + 1..]);
                let face = self.phi(&merged)?;
                axpy(&mut target, if i % 2 == 0 { 1 } else { -1 }, &face);
            }
            let last = self.phi(&cell[..n - 1])?;
            axpy(&mut target, if n % 2 == 0 { 1 } else { -1 }, &last);
            self.res.lift(n, &target)?
        };
        self.phi
            .lock()
            .expect("phi cache")
            .insert(cell.to_vec(), v.clone());
        Ok(v)
    }

    /// Value of the bar cochain `f∘φ` on a cell, for trivial coefficients.
    fn pulled_back(&self, f: &[BigInt], cell: &[usize]) -> Result<BigInt> {
        let order = self.res.group().order();
        let v = self.phi(cell)?;
        let mut s = BigInt::zero();
        for (idx, x) in v.iter().enumerate() {
            if !x.is_zero() {
                s += x * &f[idx / order];
            }
        }
        Ok(s)
    }

    /// Alexander–Whitney cup product of integral cocycles `f ∈ C^p(F)` and
    /// `g ∈ C^q(F)`, returned as a cocycle on `F_{p+q}`:
    /// `(f⌣g)(e) = Σ c · (f∘φ)[g_1|…|g_p] · (g∘φ)[g_{p+1}|…|g_{p+q}]` over
    /// the terms `c·h[g_1|…|g_{p+q}]` of `ψ(e)`.
    pub fn cup(&mut self, f: &[BigInt], p: usize, g: &[BigInt], q: usize) -> Result<Vec<BigInt>> {
        if f.len() != self.res.rank(p) || g.len() != self.res.rank(q) {
            return Err(Error::Dimension("cochain length does not match degree".to_string()));
        }
        let chains: Vec<BarChain> = self.psi(p + q)?.to_vec();
        let mut front: HashMap<Vec<usize>, BigInt> = HashMap::new();
        let mut back: HashMap<Vec<usize>, BigInt> = HashMap::new();
        let mut out = Vec::with_capacity(chains.len());
        for chain in &chains {
            let mut total = BigInt::zero();
            for ((_, cell), c) in chain {
                let (a, b) = cell.split_at(p);
                let fa = match front.get(a) {
                    Some(x) => x.clone(),
                    None => {
                        let x = self.pulled_back(f, a)?;
                        front.insert(a.to_vec(), x.clone());
                        x
                    }
                };
                if fa.is_zero() {
                    continue;
                }
                let gb = match back.get(b) {
                    Some(x) => x.clone(),
                    None => {
                        let x = self.pulled_back(g, b)?;
                        back.insert(b.to_vec(), x.clone());
                        x
                    }
                };
                total += c * fa * gb;
            }
            out.push(total);
        }
        Ok(out)
    }
}

fn axpy(dst: &mut [BigInt], sign: i32, src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            if sign > 0 {
                *d += s;
            } else {
                *d -= s;
            }
        }
    }
}
