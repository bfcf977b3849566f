//! Naming of cohomology classes: parse generator monomials like `u1`,
//! `z1w0` or `u1*w0`, and express computed classes back in generator
//! notation when they decompose over named monomials.

use zigzag_core::complexes::{Complexes, HHClass};
use zigzag_core::linalg::{add_scaled, get_entry, scale_vec, SparseVec};
use zigzag_core::products::{presentation, Presentation};
use zigzag_core::Scalar;

pub struct Namer<K: Scalar> {
    pres: Presentation<K>,
}

impl<K: Scalar> Namer<K> {
    pub fn new(ctx: &mut Complexes<K>) -> Self {
        Namer {
            pres: presentation(ctx),
        }
    }

    pub fn generator_names(&self) -> Vec<String> {
        let mut names = vec!["1".to_string()];
        names.extend(self.pres.gens.iter().map(|g| g.name.clone()));
        names
    }

    /// Split `u1w0`, `u1*w0` or `1` into generator tokens.
    fn tokenize(&self, name: &str) -> Option<Vec<String>> {
        if name == "1" {
            return Some(vec![]);
        }
        let mut tokens = Vec::new();
        for part in name.split('*') {
            let mut chars = part.chars().peekable();
            while let Some(c) = chars.next() {
                if !matches!(c, 'z' | 'u' | 'w') {
                    return None;
                }
                let mut tok = String::from(c);
                while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                    tok.push(chars.next().unwrap());
                }
                if tok.len() == 1 {
                    return None;
                }
                tokens.push(tok);
            }
        }
        if tokens.iter().all(|t| self.pres.has_gen(t)) {
            Some(tokens)
        } else {
            None
        }
    }

    /// The class named by a generator monomial.
    pub fn class_of_name(&self, ctx: &mut Complexes<K>, name: &str) -> Option<HHClass<K>> {
        let tokens = self.tokenize(name)?;
        let refs: Vec<&str> = tokens.iter().map(|t| t.as_str()).collect();
        Some(self.pres.monomial(ctx, &refs))
    }

    /// All nonzero generator monomials of the given degree, with names.
    fn monomials(&self, ctx: &mut Complexes<K>, degree: usize) -> Vec<(String, HHClass<K>)> {
        let u_names: Vec<&str> = self
            .pres
            .gens
            .iter()
            .filter(|g| g.degree == 1)
            .map(|g| g.name.as_str())
            .collect();
        let w_names: Vec<&str> = self
            .pres
            .gens
            .iter()
            .filter(|g| g.degree >= 2)
            .map(|g| g.name.as_str())
            .collect();
        let w_deg = self.pres.w_degree.unwrap_or(usize::MAX);
        let mut out: Vec<(String, HHClass<K>)> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        // z-part (degree 0): none, z1, z2
        for z in [None, Some("z1"), Some("z2")] {
            // u-part: subsets of the degree-1 generators
            for mask in 0..(1u32 << u_names.len()) {
                let us: Vec<&str> = u_names
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, n)| *n)
                    .collect();
                let rem = degree as i64 - us.len() as i64;
                if rem < 0 {
                    continue;
                }
                if rem == 0 {
                    push_monomial(ctx, &self.pres, z, &us, &[], &mut out, &mut seen);
                } else if w_deg != usize::MAX && rem as usize % w_deg == 0 {
                    let k = rem as usize / w_deg;
                    for ws in multisets(&w_names, k) {
                        push_monomial(ctx, &self.pres, z, &us, &ws, &mut out, &mut seen);
                    }
                }
            }
        }
        out
    }

    /// Express a class as a combination of generator monomials, if it
    /// decomposes.
    pub fn express(&self, ctx: &mut Complexes<K>, cls: &HHClass<K>) -> Option<String> {
        if cls.is_zero() {
            return Some("0".to_string());
        }
        let monos = self.monomials(ctx, cls.degree);
        if monos.is_empty() {
            return None;
        }
        let dim = cls.coords.len();
        // echelon with recipe tracking over the monomial list
        let mut rows: Vec<(SparseVec<K>, Vec<K>)> = Vec::new();
        for (idx, (_, mc)) in monos.iter().enumerate() {
            let mut v: SparseVec<K> = mc
                .coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect();
            let mut recipe = vec![K::zero(); monos.len()];
            recipe[idx] = K::one();
            for (row, rrec) in &rows {
                let lead = row.first().expect("nonzero row").0;
                let c = get_entry(&v, lead);
                if !c.is_zero() {
                    let scale = -c;
                    v = add_scaled(&v, &scale, row);
                    for (r, x) in recipe.iter_mut().zip(rrec.iter()) {
                        *r = r.clone() + scale.clone() * x.clone();
                    }
                }
            }
            if let Some((_, lead_c)) = v.first().cloned() {
                let inv = lead_c.inv();
                v = scale_vec(&v, &inv);
                for r in recipe.iter_mut() {
                    *r = r.clone() * inv.clone();
                }
                rows.push((v, recipe));
            }
        }
        // reduce the target
        let mut v: SparseVec<K> = cls
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let mut combo = vec![K::zero(); monos.len()];
        loop {
            let Some((lead, c)) = v.first().cloned() else {
                break;
            };
            let Some((row, rrec)) = rows.iter().find(|(r, _)| r.first().unwrap().0 == lead) else {
                return None; // not in the span
            };
            let scale = -c.clone();
            v = add_scaled(&v, &scale, row);
            for (dst, x) in combo.iter_mut().zip(rrec.iter()) {
                *dst = dst.clone() + c.clone() * x.clone();
            }
        }
        let _ = dim;
        // render
        let mut parts: Vec<String> = Vec::new();
        for (c, (name, _)) in combo.iter().zip(monos.iter()) {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (neg, abs) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(" + ") && !rest.contains(" - ") => {
                    (true, rest.to_string())
                }
                _ => (false, cs),
            };
            let term = if abs == "1" {
                name.clone()
            } else if abs.contains(' ') || abs.contains('/') {
                format!("({abs})*{name}")
            } else {
                format!("{abs}*{name}")
            };
            if parts.is_empty() {
                parts.push(if neg { format!("-{term}") } else { term });
            } else {
                parts.push(if neg {
                    format!("- {term}")
                } else {
                    format!("+ {term}")
                });
            }
        }
        Some(parts.join(" "))
    }
}

fn push_monomial<K: Scalar>(
    ctx: &mut Complexes<K>,
    pres: &Presentation<K>,
    z: Option<&str>,
    us: &[&str],
    ws: &[&str],
    out: &mut Vec<(String, HHClass<K>)>,
    seen: &mut std::collections::HashSet<String>,
) {
    let mut parts: Vec<&str> = Vec::new();
    if let Some(z) = z {
        parts.push(z);
    }
    parts.extend_from_slice(us);
    parts.extend_from_slice(ws);
    let name = if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    };
    if !seen.insert(name.clone()) {
        return;
    }
    let cls = pres.monomial(ctx, &parts);
    if !cls.is_zero() {
        out.push((name, cls));
    }
}

/// Multisets of size k drawn from the slice, as sorted selections.
fn multisets<'a>(items: &[&'a str], k: usize) -> Vec<Vec<&'a str>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.is_empty() {
        return vec![];
    }
    let mut out = Vec::new();
    // choose how many copies of the first item
    for take in 0..=k {
        for mut rest in multisets(&items[1..], k - take) {
            let mut v = vec![items[0]; take];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}
