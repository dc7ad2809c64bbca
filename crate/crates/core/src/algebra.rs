//! Finite-dimensional basic Lie superalgebra kernel: homogeneous basis with
//! parities, structure constants, root decomposition, triangular
//! decomposition, invariant form on h*, and the Weyl vector.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::coeff::Rat;
use crate::error::{Error, Result};
use crate::linalg::solve_columns;
use crate::weight::{Parity, Root, Weight};

/// Linear combination of basis generators; the value type of the bracket
/// table (every bracket has degree <= 1).
pub type LinComb = Vec<(usize, Rat)>;

/// Identifies which weight coordinate a Cartan basis element reads off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CartanCoord {
    /// 0-based index into `Weight::delta`.
    Delta(usize),
    /// 0-based index into `Weight::eps`.
    Eps(usize),
}

#[derive(Clone, Debug)]
pub enum GenKind {
    Cartan(CartanCoord),
    Root(Root),
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub label: String,
    pub parity: Parity,
    pub kind: GenKind,
}

impl Generator {
    pub fn root(&self) -> Option<&Root> {
        match &self.kind {
            GenKind::Root(r) => Some(r),
            GenKind::Cartan(_) => None,
        }
    }

    pub fn is_cartan(&self) -> bool {
        matches!(self.kind, GenKind::Cartan(_))
    }
}

/// Coarse PBW classification; monomial factors are sorted by
/// `(class, within-class order)`, so odd lowering generators come first,
/// then even lowering, then Cartan, then raising.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum GenClass {
    NegOdd = 0,
    NegEven = 1,
    Cartan = 2,
    Raising = 3,
}

/// Basis-indexed structure-constant model of a basic Lie superalgebra.
///
/// Instances are immutable after construction; read-only sharing across
/// threads is safe.
pub struct SuperAlgebra {
    pub name: String,
    pub delta_rank: usize,
    pub eps_rank: usize,
    pub basis: Vec<Generator>,
    /// Canonical half of the bracket table: entry for `(i, j)` with `i <= j`
    /// at index `i * dim + j`; the other half is derived via
    /// super-antisymmetry.
    half_brackets: Vec<Option<Box<[(usize, Rat)]>>>,
    pub rho: Weight,
    /// Cartan basis indices in canonical Cartan order.
    pub cartan_gens: Vec<usize>,
    class_of: Vec<GenClass>,
    pbw_pos: Vec<usize>,
    pbw_gen: Vec<usize>,
    /// Lowering generators in ascending PBW position.
    pub negative_gens: Vec<usize>,
    /// Raising generators in ascending PBW position.
    pub positive_gens: Vec<usize>,
    /// Generators of the simple positive root spaces.
    pub simple_positive_gens: Vec<usize>,
    simple_roots: Vec<Weight>,
    root_index: BTreeMap<Weight, usize>,
    /// For every root generator: the expansion of the positive root
    /// (the root itself for raising, its negative for lowering) over the
    /// simple roots. Non-negative integers by construction.
    simple_coords: Vec<Option<Vec<Rat>>>,
}

const JACOBI_VALIDATION_CAP: usize = 100;

impl SuperAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn gen(&self, idx: usize) -> &Generator {
        &self.basis[idx]
    }

    pub fn class(&self, idx: usize) -> GenClass {
        self.class_of[idx]
    }

    pub fn pbw_position(&self, gen: usize) -> usize {
        self.pbw_pos[gen]
    }

    pub fn gen_at_position(&self, pos: usize) -> usize {
        self.pbw_gen[pos]
    }

    /// Weight of a basis generator (zero for Cartan elements).
    pub fn gen_weight(&self, idx: usize) -> Weight {
        match &self.basis[idx].kind {
            GenKind::Cartan(_) => Weight::zero(self.delta_rank, self.eps_rank),
            GenKind::Root(r) => r.weight.clone(),
        }
    }

    /// The bracket `[x_i, x_j]`; the stored half is `(min, max)` and the
    /// other half is derived via super-antisymmetry.
    pub fn bracket(&self, i: usize, j: usize) -> LinComb {
        let dim = self.dim();
        if i <= j {
            self.half_brackets[i * dim + j]
                .as_deref()
                .map(|b| b.to_vec())
                .unwrap_or_default()
        } else {
            let stored = self.half_brackets[j * dim + i].as_deref();
            let sign = self.basis[i].parity.swap_sign(self.basis[j].parity);
            match stored {
                None => Vec::new(),
                Some(terms) => terms
                    .iter()
                    .map(|(g, c)| {
                        (
                            *g,
                            if sign < 0 { c.clone() } else { -c },
                        )
                    })
                    .collect(),
            }
        }
    }

    /// Bilinear extension of the bracket to degree <= 1 elements.
    pub fn bracket_lin(&self, x: &[(usize, Rat)], y: &[(usize, Rat)]) -> LinComb {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (gi, ci) in x {
            for (gj, cj) in y {
                for (g, c) in self.bracket(*gi, *gj) {
                    let entry = acc.entry(g).or_insert_with(Rat::zero);
                    *entry += &(&c * &(ci * cj));
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Exact value of the invariant form `(u, w)` with rank checking.
    pub fn bilinear_form(&self, u: &Weight, w: &Weight) -> Result<Rat> {
        self.check_rank(u)?;
        u.form(w)
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.delta_rank() != self.delta_rank || w.eps_rank() != self.eps_rank {
            return Err(Error::RankMismatch(
                self.delta_rank,
                self.eps_rank,
                w.delta_rank(),
                w.eps_rank(),
            ));
        }
        Ok(())
    }

    /// True iff `(lambda + rho, beta) = 0` exactly. `beta` must be an odd
    /// positive root of this algebra.
    pub fn is_atypical(&self, lam: &Weight, beta: &Root) -> Result<bool> {
        self.check_rank(lam)?;
        let gen = self.root_gen(&beta.weight).ok_or_else(|| {
            Error::NotOddPositiveRoot(format!("{}", beta.weight), self.name.clone())
        })?;
        let actual = self.basis[gen].root().expect("root generator");
        if !actual.parity.is_odd() || !actual.positive {
            return Err(Error::NotOddPositiveRoot(
                format!("{}", beta.weight),
                self.name.clone(),
            ));
        }
        Ok(lam.add(&self.rho).form(&beta.weight)?.is_zero())
    }

    /// Looks up the generator spanning the root space of `w`.
    pub fn root_gen(&self, w: &Weight) -> Option<usize> {
        self.root_index.get(w).copied()
    }

    pub fn root_of_weight(&self, w: &Weight) -> Option<Root> {
        self.root_gen(w)
            .and_then(|g| self.basis[g].root().cloned())
    }

    /// All positive odd roots, sorted canonically.
    pub fn odd_positive_roots(&self) -> Vec<Root> {
        let mut roots: Vec<Root> = self
            .basis
            .iter()
            .filter_map(Generator::root)
            .filter(|r| r.positive && r.parity.is_odd())
            .cloned()
            .collect();
        roots.sort_by(|a, b| a.weight.cmp(&b.weight));
        roots
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        let mut roots: Vec<Root> = self
            .basis
            .iter()
            .filter_map(Generator::root)
            .filter(|r| r.positive)
            .cloned()
            .collect();
        roots.sort_by(|a, b| a.weight.cmp(&b.weight));
        roots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// The value of a weight on the `k`-th Cartan basis element.
    pub fn weight_on_cartan(&self, w: &Weight, k: usize) -> Rat {
        let gen = self.cartan_gens[k];
        match self.basis[gen].kind {
            GenKind::Cartan(CartanCoord::Delta(i)) => w.delta[i].clone(),
            GenKind::Cartan(CartanCoord::Eps(j)) => w.eps[j].clone(),
            GenKind::Root(_) => unreachable!("cartan_gens holds Cartan generators"),
        }
    }

    /// All Cartan coordinate values of a weight, in Cartan order.
    pub fn cartan_values(&self, w: &Weight) -> Vec<Rat> {
        (0..self.cartan_gens.len())
            .map(|k| self.weight_on_cartan(w, k))
            .collect()
    }

    /// Expands a weight over the simple roots; `None` when it is not in
    /// their exact span.
    pub fn simple_decomposition(&self, w: &Weight) -> Option<Vec<Rat>> {
        let cols: Vec<Vec<Rat>> = self.simple_roots.iter().map(weight_coords).collect();
        solve_columns(&cols, &weight_coords(w))
    }

    /// Simple-root expansion of the generator's positive root (raising: its
    /// root; lowering: the negated root). `None` for Cartan generators.
    pub fn gen_simple_coords(&self, gen: usize) -> Option<&[Rat]> {
        self.simple_coords[gen].as_deref()
    }

    /// Builds gl(m|n) with the standard matrix-unit basis over the index set
    /// `mbar < ... < 1bar < 1 < ... < n`.
    pub fn gl(m: usize, n: usize) -> Result<SuperAlgebra> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidConstruction(
                "gl(m|n) requires m, n >= 1".into(),
            ));
        }
        let p = m + n;
        let dim = p * p;
        let barred = |pos: usize| pos < m;
        let idx_label = |pos: usize| {
            if barred(pos) {
                format!("{}bar", m - pos)
            } else {
                format!("{}", pos - m + 1)
            }
        };
        let omega = |pos: usize| {
            if barred(pos) {
                Weight::delta_unit(m, n, m - pos)
            } else {
                Weight::eps_unit(m, n, pos - m + 1)
            }
        };

        let mut basis = Vec::with_capacity(dim);
        for r in 0..p {
            for c in 0..p {
                let parity = if barred(r) != barred(c) {
                    Parity::Odd
                } else {
                    Parity::Even
                };
                let kind = if r == c {
                    GenKind::Cartan(if barred(r) {
                        CartanCoord::Delta(m - r - 1)
                    } else {
                        CartanCoord::Eps(r - m)
                    })
                } else {
                    GenKind::Root(Root {
                        weight: omega(r).sub(&omega(c)),
                        parity,
                        positive: r < c,
                    })
                };
                basis.push(Generator {
                    label: format!("E({},{})", idx_label(r), idx_label(c)),
                    parity,
                    kind,
                });
            }
        }

        // [E_{ij}, E_{kl}} = d_{jk} E_{il} - (-1)^{(|i|+|j|)(|k|+|l|)} d_{li} E_{kj}
        let gen_idx = |r: usize, c: usize| r * p + c;
        let mut table: Vec<Vec<LinComb>> = vec![vec![Vec::new(); dim]; dim];
        for r1 in 0..p {
            for c1 in 0..p {
                for r2 in 0..p {
                    for c2 in 0..p {
                        let mut terms: LinComb = Vec::new();
                        if c1 == r2 {
                            terms.push((gen_idx(r1, c2), Rat::one()));
                        }
                        if c2 == r1 {
                            let sign = basis[gen_idx(r1, c1)]
                                .parity
                                .swap_sign(basis[gen_idx(r2, c2)].parity);
                            terms.push((gen_idx(r2, c1), Rat::int(-sign)));
                        }
                        table[gen_idx(r1, c1)][gen_idx(r2, c2)] = normalize_lincomb(terms);
                    }
                }
            }
        }

        // rho = sum_i i*delta_i - sum_j j*eps_j - (m+n+1)/2 * 1_{m|n}
        let offset = Rat::new((m + n + 1) as i64, 2).unwrap();
        let rho = Weight {
            delta: (1..=m).map(|i| Rat::int(i as i64) - &offset).collect(),
            eps: (1..=n).map(|j| Rat::int(-(j as i64)) + &offset).collect(),
        };

        SuperAlgebra::from_table(format!("gl({m}|{n})"), m, n, basis, table, rho)
    }

    /// Shared constructor: verifies super-antisymmetry, stores the canonical
    /// half of the table, computes PBW order, root data and simple roots,
    /// and runs the construction-time validation suite.
    pub(crate) fn from_table(
        name: String,
        delta_rank: usize,
        eps_rank: usize,
        basis: Vec<Generator>,
        table: Vec<Vec<LinComb>>,
        rho: Weight,
    ) -> Result<SuperAlgebra> {
        let dim = basis.len();

        // Super-antisymmetry across the full table before the half is kept.
        for i in 0..dim {
            for j in i..dim {
                let sign = basis[i].parity.swap_sign(basis[j].parity);
                let expect: LinComb = table[i][j]
                    .iter()
                    .map(|(g, c)| (*g, if sign < 0 { c.clone() } else { -c }))
                    .collect();
                if normalize_lincomb(expect) != normalize_lincomb(table[j][i].clone()) {
                    return Err(Error::InvalidConstruction(format!(
                        "{name}: bracket table violates super-antisymmetry at ({i},{j})"
                    )));
                }
            }
        }

        let mut half_brackets: Vec<Option<Box<[(usize, Rat)]>>> = vec![None; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = normalize_lincomb(table[i][j].clone());
                if !v.is_empty() {
                    half_brackets[i * dim + j] = Some(v.into_boxed_slice());
                }
            }
        }

        let class_of: Vec<GenClass> = basis
            .iter()
            .map(|g| match &g.kind {
                GenKind::Cartan(_) => GenClass::Cartan,
                GenKind::Root(r) => match (r.positive, r.parity) {
                    (false, Parity::Odd) => GenClass::NegOdd,
                    (false, Parity::Even) => GenClass::NegEven,
                    (true, _) => GenClass::Raising,
                },
            })
            .collect();

        // PBW total order: (class, enumeration index). Builders enumerate
        // within-class generators in (row, column) lexicographic order for
        // gl, so that order is inherited here.
        let mut order: Vec<usize> = (0..dim).collect();
        order.sort_by_key(|&g| (class_of[g], g));
        let mut pbw_pos = vec![0usize; dim];
        for (pos, &g) in order.iter().enumerate() {
            pbw_pos[g] = pos;
        }

        let cartan_gens: Vec<usize> = (0..dim).filter(|&g| basis[g].is_cartan()).collect();
        let negative_gens: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&g| matches!(class_of[g], GenClass::NegOdd | GenClass::NegEven))
            .collect();
        let positive_gens: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&g| class_of[g] == GenClass::Raising)
            .collect();

        let mut root_index = BTreeMap::new();
        for (g, gen) in basis.iter().enumerate() {
            if let Some(r) = gen.root() {
                if root_index.insert(r.weight.clone(), g).is_some() {
                    return Err(Error::InvalidConstruction(format!(
                        "{name}: root space of {} is not one-dimensional",
                        r.weight
                    )));
                }
            }
        }

        // Simple positive roots: positive roots that are not the sum of two
        // positive roots.
        let positive_weights: Vec<Weight> = positive_gens
            .iter()
            .map(|&g| basis[g].root().expect("raising generator").weight.clone())
            .collect();
        let positive_set: std::collections::BTreeSet<&Weight> = positive_weights.iter().collect();
        let mut simple_roots: Vec<Weight> = positive_weights
            .iter()
            .filter(|w| {
                !positive_weights
                    .iter()
                    .any(|a| positive_set.contains(&w.sub(a)) )
            })
            .cloned()
            .collect();
        simple_roots.sort();
        simple_roots.dedup();

        let simple_positive_gens: Vec<usize> = positive_gens
            .iter()
            .copied()
            .filter(|&g| {
                simple_roots.contains(&basis[g].root().expect("raising generator").weight)
            })
            .collect();

        let alg = SuperAlgebra {
            name,
            delta_rank,
            eps_rank,
            basis,
            half_brackets,
            rho,
            cartan_gens,
            class_of,
            pbw_pos,
            pbw_gen: order,
            negative_gens,
            positive_gens,
            simple_positive_gens,
            simple_roots,
            root_index,
            simple_coords: Vec::new(),
        };

        let mut alg = alg;
        alg.simple_coords = (0..alg.dim())
            .map(|g| {
                alg.basis[g].root().map(|r| {
                    let target = if r.positive {
                        r.weight.clone()
                    } else {
                        r.weight.neg()
                    };
                    alg.simple_decomposition(&target).unwrap_or_else(|| {
                        panic!("positive root {} outside simple-root span", target)
                    })
                })
            })
            .collect();

        alg.validate()?;
        Ok(alg)
    }

    /// Construction-time invariants: weight additivity of every stored
    /// bracket, exhaustive super-Jacobi (small ranks), half-sum consistency
    /// of rho, and non-negative integral simple decompositions.
    fn validate(&self) -> Result<()> {
        let dim = self.dim();

        // Weight additivity: every term of [x,y] carries weight(x)+weight(y).
        for i in 0..dim {
            for j in i..dim {
                let sum = self.gen_weight(i).add(&self.gen_weight(j));
                for (g, _) in self.bracket(i, j) {
                    if self.gen_weight(g) != sum {
                        return Err(Error::InvalidConstruction(format!(
                            "{}: bracket [{}, {}] violates weight additivity",
                            self.name, self.basis[i].label, self.basis[j].label
                        )));
                    }
                }
            }
        }

        // rho equals the half-sum of positive even roots minus half-sum of
        // positive odd roots.
        let mut half_sum = Weight::zero(self.delta_rank, self.eps_rank);
        for root in self.positive_roots() {
            if root.parity.is_odd() {
                half_sum = half_sum.sub(&root.weight);
            } else {
                half_sum = half_sum.add(&root.weight);
            }
        }
        let half = Rat::new(1, 2).unwrap();
        if half_sum.scale(&half) != self.rho {
            return Err(Error::InvalidConstruction(format!(
                "{}: rho does not match the half-sum formula",
                self.name
            )));
        }

        // Cartan eigenvalue consistency: [H, x_alpha] = alpha(H) x_alpha.
        for (k, &h) in self.cartan_gens.iter().enumerate() {
            for g in 0..dim {
                if let Some(root) = self.basis[g].root() {
                    let expected = self.weight_on_cartan(&root.weight, k);
                    let got = self.bracket(h, g);
                    let want: LinComb = if expected.is_zero() {
                        Vec::new()
                    } else {
                        vec![(g, expected)]
                    };
                    if got != want {
                        return Err(Error::InvalidConstruction(format!(
                            "{}: [{}, {}] is not the declared root eigenvalue",
                            self.name, self.basis[h].label, self.basis[g].label
                        )));
                    }
                }
            }
        }

        // Simple decompositions of positive roots must be non-negative ints.
        for g in 0..dim {
            if let Some(coords) = self.gen_simple_coords(g) {
                if coords.iter().any(|c| c.is_negative() || !c.is_integer()) {
                    return Err(Error::InvalidConstruction(format!(
                        "{}: root of {} has a non-integral simple expansion",
                        self.name, self.basis[g].label
                    )));
                }
            }
        }

        if dim <= JACOBI_VALIDATION_CAP {
            self.verify_jacobi()?;
        }
        Ok(())
    }

    /// Graded Leibniz form of super-Jacobi, exhaustively over basis triples:
    /// `[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]`.
    pub fn verify_jacobi(&self) -> Result<()> {
        let dim = self.dim();
        for x in 0..dim {
            for y in 0..dim {
                let xy = self.bracket(x, y);
                let sign = self.basis[x].parity.swap_sign(self.basis[y].parity);
                for z in 0..dim {
                    let yz = self.bracket(y, z);
                    let lhs = self.bracket_lin(&[(x, Rat::one())], &yz);
                    let xz = self.bracket(x, z);
                    let mut rhs = self.bracket_lin(&xy, &[(z, Rat::one())]);
                    let term2 = self.bracket_lin(&[(y, Rat::int(sign))], &xz);
                    rhs.extend(term2);
                    if normalize_lincomb(lhs) != normalize_lincomb(rhs) {
                        return Err(Error::InvalidConstruction(format!(
                            "{}: super-Jacobi fails on ({}, {}, {})",
                            self.name,
                            self.basis[x].label,
                            self.basis[y].label,
                            self.basis[z].label
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Sorts by generator, combines duplicates, drops zeros.
pub fn normalize_lincomb(terms: LinComb) -> LinComb {
    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
    for (g, c) in terms {
        let entry = acc.entry(g).or_insert_with(Rat::zero);
        *entry += &c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn weight_coords(w: &Weight) -> Vec<Rat> {
    w.delta.iter().chain(w.eps.iter()).cloned().collect()
}

static GL_CACHE: Lazy<Mutex<HashMap<(usize, usize), Arc<SuperAlgebra>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Cached gl(m|n); construction validates exhaustively, so reuse across
/// tests and sweep instances matters.
pub fn gl_cached(m: usize, n: usize) -> Arc<SuperAlgebra> {
    let mut cache = GL_CACHE.lock().unwrap();
    cache
        .entry((m, n))
        .or_insert_with(|| Arc::new(SuperAlgebra::gl(m, n).expect("gl construction")))
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    fn gen_by_label(alg: &SuperAlgebra, label: &str) -> usize {
        alg.basis
            .iter()
            .position(|g| g.label == label)
            .unwrap_or_else(|| panic!("no generator {label}"))
    }

    #[test]
    fn gl11_bracket_of_odd_pair_is_anticommutator() {
        let alg = SuperAlgebra::gl(1, 1).unwrap();
        let e_low = gen_by_label(&alg, "E(1,1bar)");
        let e_raise = gen_by_label(&alg, "E(1bar,1)");
        let h_bar = gen_by_label(&alg, "E(1bar,1bar)");
        let h = gen_by_label(&alg, "E(1,1)");
        let mut b = alg.bracket(e_low, e_raise);
        b.sort();
        assert_eq!(b, vec![(h_bar.min(h), r(1)), (h_bar.max(h), r(1))]);
    }

    #[test]
    fn gl_count_of_odd_positive_roots() {
        for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let alg = SuperAlgebra::gl(m, n).unwrap();
            assert_eq!(alg.odd_positive_roots().len(), m * n);
        }
    }

    #[test]
    fn delta_eps_orthogonal() {
        let alg = SuperAlgebra::gl(3, 2).unwrap();
        for i in 1..=3 {
            for k in 1..=2 {
                let d = Weight::delta_unit(3, 2, i);
                let e = Weight::eps_unit(3, 2, k);
                assert_eq!(alg.bilinear_form(&d, &e).unwrap(), r(0));
            }
        }
    }

    #[test]
    fn rho_pairs_with_even_simple_roots() {
        for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 3)] {
            let alg = SuperAlgebra::gl(m, n).unwrap();
            for alpha in alg.simple_roots() {
                let root = alg.root_of_weight(alpha).unwrap();
                if !root.parity.is_odd() {
                    let lhs = alg.bilinear_form(&alg.rho, alpha).unwrap();
                    let aa = alg.bilinear_form(alpha, alpha).unwrap();
                    assert_eq!(lhs, aa.checked_div(&r(2)).unwrap());
                }
            }
        }
    }

    #[test]
    fn gl22_atypicality_matches_a2_plus_b2() {
        let alg = SuperAlgebra::gl(2, 2).unwrap();
        let beta = alg
            .root_of_weight(
                &Weight::delta_unit(2, 2, 2).sub(&Weight::eps_unit(2, 2, 2)),
            )
            .unwrap();
        // (a_2, a_1 | b_1, b_2) is beta-atypical iff a_2 + b_2 = 0.
        for (a2, a1, b1, b2) in [(3, 1, 5, -3), (0, 7, 2, 0), (1, 1, 1, 1), (-2, 4, 0, 3)] {
            let lam = Weight::from_display(&[r(a2), r(a1)], &[r(b1), r(b2)]);
            assert_eq!(
                alg.is_atypical(&lam, &beta).unwrap(),
                a2 + b2 == 0,
                "a2={a2} b2={b2}"
            );
        }
    }

    #[test]
    fn gl11_nonatypical_example() {
        let alg = SuperAlgebra::gl(1, 1).unwrap();
        let beta = alg
            .root_of_weight(&Weight::delta_unit(1, 1, 1).sub(&Weight::eps_unit(1, 1, 1)))
            .unwrap();
        let lam = Weight::from_display(&[r(1)], &[r(1)]);
        assert!(!alg.is_atypical(&lam, &beta).unwrap());
    }

    #[test]
    fn is_atypical_rejects_even_roots() {
        let alg = SuperAlgebra::gl(2, 1).unwrap();
        let even = alg
            .root_of_weight(&Weight::delta_unit(2, 1, 2).sub(&Weight::delta_unit(2, 1, 1)))
            .unwrap();
        let lam = Weight::zero(2, 1);
        assert!(matches!(
            alg.is_atypical(&lam, &even),
            Err(Error::NotOddPositiveRoot(..))
        ));
    }

    #[test]
    fn simple_roots_match_distinguished_system() {
        let alg = SuperAlgebra::gl(2, 2).unwrap();
        let d = |i| Weight::delta_unit(2, 2, i);
        let e = |j| Weight::eps_unit(2, 2, j);
        let mut expected = vec![d(2).sub(&d(1)), d(1).sub(&e(1)), e(1).sub(&e(2))];
        expected.sort();
        assert_eq!(alg.simple_roots(), &expected[..]);
    }

    #[test]
    fn pbw_order_puts_odd_lowering_first() {
        let alg = SuperAlgebra::gl(2, 1).unwrap();
        let classes: Vec<GenClass> = (0..alg.dim())
            .map(|pos| alg.class(alg.gen_at_position(pos)))
            .collect();
        let mut sorted = classes.clone();
        sorted.sort();
        assert_eq!(classes, sorted);
        assert_eq!(alg.class(alg.gen_at_position(0)), GenClass::NegOdd);
    }

    #[test]
    fn gl_rejects_zero_rank() {
        assert!(SuperAlgebra::gl(0, 1).is_err());
        assert!(SuperAlgebra::gl(1, 0).is_err());
    }
}
