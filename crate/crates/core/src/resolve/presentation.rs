use super::graded::minimal_subset;
use super::ring::{Ring, RingSpec};
use crate::arith::{poly_parse, poly_print, Poly};
use crate::error::{Error, Result};
use crate::groebner::{VecOps, Vector};

/// Homogeneous map `⊕ Q(-source_j) → ⊕ Q(-target_i)`, stored by columns:
/// column `j` is the image of the `j`-th source generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    pub target: Vec<i32>,
    pub source: Vec<i32>,
    pub columns: Vec<Vector>,
}

impl GradedMatrix {
    pub fn new(target: Vec<i32>, source: Vec<i32>, columns: Vec<Vector>) -> Self {
        debug_assert_eq!(source.len(), columns.len());
        GradedMatrix { target, source, columns }
    }

    pub fn zero(target: Vec<i32>, source: Vec<i32>) -> Self {
        let columns = vec![Vector::zero(); source.len()];
        GradedMatrix { target, source, columns }
    }

    pub fn rows(&self) -> usize {
        self.target.len()
    }

    pub fn cols(&self) -> usize {
        self.source.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly {
        self.columns[j].component(i as u32)
    }

    /// Row-major entries.
    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        let cols: Vec<Vec<Poly>> = self.columns.iter().map(|c| c.to_polys(self.rows())).collect();
        (0..self.rows()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// `self ∘ other` over `Q`, reduced to normal form.
    pub fn compose(&self, ring: &RingSpec, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.cols(), other.rows(), "composition shape");
        let ops = VecOps::new(ring.ambient());
        let columns = other
            .columns
            .iter()
            .map(|c| ring.nf_vector(&ops.combine(&c.to_polys(other.rows()), &self.columns)))
            .collect();
        GradedMatrix::new(self.target.clone(), other.source.clone(), columns)
    }

    /// Same composition in `P`, without reduction.
    pub fn compose_ambient(&self, ring: &RingSpec, other: &GradedMatrix) -> GradedMatrix {
        let ops = VecOps::new(ring.ambient());
        let columns = other.columns.iter().map(|c| ops.combine(&c.to_polys(other.rows()), &self.columns)).collect();
        GradedMatrix::new(self.target.clone(), other.source.clone(), columns)
    }

    /// Dual map `⊕ Q(target_i) → ⊕ Q(source_j)`.
    pub fn transpose(&self) -> GradedMatrix {
        let rows = self.to_rows();
        let columns = rows.iter().map(|r| Vector::from_polys(r, 0)).collect();
        GradedMatrix::new(self.source.iter().map(|d| -d).collect(), self.target.iter().map(|d| -d).collect(), columns)
    }

    /// Some entry has a nonzero constant term.
    pub fn has_unit_entry(&self) -> bool {
        self.columns.iter().any(|c| c.terms().iter().any(|t| t.mono.is_one()))
    }

    pub fn direct_sum(&self, other: &GradedMatrix) -> GradedMatrix {
        let shift = self.rows() as u32;
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().map(|c| c.shifted(shift)));
        GradedMatrix::new(
            [self.target.clone(), other.target.clone()].concat(),
            [self.source.clone(), other.source.clone()].concat(),
            columns,
        )
    }
}

/// `coker(relations)`: a graded `Q`-module presented by generators of the
/// given degrees and relation columns.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    ring: Ring,
    relations: GradedMatrix,
}

impl PartialEq for ModulePresentation {
    fn eq(&self, other: &Self) -> bool {
        self.relations == other.relations && self.ring.to_file() == other.ring.to_file()
    }
}

impl ModulePresentation {
    /// Builds a presentation from relation columns, reducing them modulo
    /// `(f)`, dropping zero columns and checking homogeneity.
    pub fn new(ring: &Ring, gen_degrees: Vec<i32>, columns: Vec<Vector>) -> Result<Self> {
        let m = gen_degrees.len();
        let mut cols = Vec::new();
        let mut degs = Vec::new();
        for (j, c) in columns.iter().enumerate() {
            if c.max_comp().is_some_and(|k| k as usize >= m) {
                return Err(Error::input(
                    "shape_mismatch",
                    format!("relation column {} has more entries than generators", j + 1),
                ));
            }
            let c = ring.nf_vector(c);
            if c.is_zero() {
                continue;
            }
            let Some(d) = c.homogeneous_degree(&gen_degrees) else {
                return Err(Error::input(
                    "inhomogeneous_column",
                    format!("relation column {} is not homogeneous for the generator degrees", j + 1),
                ));
            };
            cols.push(c);
            degs.push(d);
        }
        Ok(ModulePresentation { ring: ring.clone(), relations: GradedMatrix::new(gen_degrees, degs, cols) })
    }

    /// Free module `⊕ Q(-d)`.
    pub fn free(ring: &Ring, gen_degrees: Vec<i32>) -> Self {
        ModulePresentation { ring: ring.clone(), relations: GradedMatrix::new(gen_degrees, Vec::new(), Vec::new()) }
    }

    /// Residue field `k = Q/m` in degree 0.
    pub fn residue_field(ring: &Ring) -> Self {
        let cols = (0..ring.nvars()).map(|v| Vector::from_poly(&ring.ambient().var(v), 0)).collect();
        ModulePresentation::new(ring, vec![0], cols).expect("variables are homogeneous")
    }

    /// `Q/(g_1, ..., g_r)` for homogeneous `g`.
    pub fn cyclic(ring: &Ring, gens: &[Poly]) -> Result<Self> {
        ModulePresentation::new(ring, vec![0], gens.iter().map(|g| Vector::from_poly(g, 0)).collect())
    }

    pub(crate) fn from_matrix(ring: &Ring, relations: GradedMatrix) -> Self {
        ModulePresentation { ring: ring.clone(), relations }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gen_degrees(&self) -> &[i32] {
        &self.relations.target
    }

    pub fn num_gens(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &GradedMatrix {
        &self.relations
    }

    pub fn is_free(&self) -> bool {
        self.relations.cols() == 0
    }

    pub fn direct_sum(&self, other: &ModulePresentation) -> ModulePresentation {
        ModulePresentation { ring: self.ring.clone(), relations: self.relations.direct_sum(&other.relations) }
    }

    /// All generator degrees shifted by `s`: `M(-s)`.
    pub fn shifted(&self, s: i32) -> ModulePresentation {
        let mut rel = self.relations.clone();
        rel.target.iter_mut().for_each(|d| *d += s);
        rel.source.iter_mut().for_each(|d| *d += s);
        ModulePresentation { ring: self.ring.clone(), relations: rel }
    }

    /// Minimal presentation: unit entries are eliminated together with the
    /// generator they make redundant, then redundant relations are dropped.
    pub fn minimalize(&self) -> ModulePresentation {
        let ring = &self.ring;
        let ops = VecOps::new(ring.ambient());
        let fld = ring.field();
        let mut gens = self.relations.target.clone();
        let mut cols = self.relations.columns.clone();
        let mut degs = self.relations.source.clone();
        loop {
            let pivot = cols
                .iter()
                .enumerate()
                .find_map(|(j, c)| c.terms().iter().find(|t| t.mono.is_one()).map(|t| (j, t.comp, t.coeff)));
            let Some((j, r, c)) = pivot else { break };
            let pcol = cols.remove(j);
            degs.remove(j);
            let inv = fld.inv(c);
            for col in cols.iter_mut() {
                let a = col.component(r);
                if a.is_zero() {
                    continue;
                }
                let scaled = ring.ambient().scale(&a, fld.neg(inv));
                *col = ring.nf_vector(&ops.add(col, &ops.mul_poly(&pcol, &scaled)));
            }
            gens.remove(r as usize);
            for col in cols.iter_mut() {
                debug_assert!(col.component(r).is_zero());
                let below = col.restrict(0..r);
                let above = col.restrict(r + 1..u32::MAX - 1);
                *col = below.concat(&above.shifted(r));
            }
            let keep: Vec<bool> = cols.iter().map(|c| !c.is_zero()).collect();
            let mut it = keep.iter();
            cols.retain(|_| *it.next().unwrap());
            let mut it = keep.iter();
            degs.retain(|_| *it.next().unwrap());
        }
        let keep = minimal_subset(ring, &gens, &cols);
        let cols: Vec<Vector> = keep.iter().map(|&j| cols[j].clone()).collect();
        let degs: Vec<i32> = keep.iter().map(|&j| degs[j]).collect();
        ModulePresentation { ring: ring.clone(), relations: GradedMatrix::new(gens, degs, cols) }
    }

    /// Module file text: `gens: [...]` and `relations: [[...], ...]` with one
    /// row per generator and one column per relation.
    pub fn to_text(&self) -> String {
        let a = self.ring.ambient();
        let gens: Vec<String> = self.gen_degrees().iter().map(|d| d.to_string()).collect();
        let rows: Vec<String> = self
            .relations
            .to_rows()
            .iter()
            .map(|r| {
                let entries: Vec<String> = r.iter().map(|p| poly_print(p, a)).collect();
                format!("[{}]", entries.join(", "))
            })
            .collect();
        format!("gens: [{}]\nrelations: [{}]\n", gens.join(", "), rows.join(", "))
    }
}

/// Parses the module file format against `ring`.
pub fn present_module(text: &str, ring: &Ring) -> Result<ModulePresentation> {
    let mut gens_src = None;
    let mut rel_src = None;
    let mut current: Option<&mut Option<String>> = None;
    for line in text.lines() {
        let line = line.split('#').next().unwrap();
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("gens:") {
            gens_src = Some(rest.to_string());
            current = Some(&mut gens_src);
        } else if let Some(rest) = trimmed.strip_prefix("relations:") {
            rel_src = Some(rest.to_string());
            current = Some(&mut rel_src);
        } else if let Some(Some(buf)) = current.as_deref_mut() {
            buf.push(' ');
            buf.push_str(trimmed);
        } else {
            return Err(Error::input("module_file", format!("unexpected line `{trimmed}`")));
        }
    }
    let gens_src = gens_src.ok_or_else(|| Error::input("module_file", "missing `gens:` entry"))?;
    let rel_src = rel_src.ok_or_else(|| Error::input("module_file", "missing `relations:` entry"))?;

    let gens = match parse_list(&gens_src)? {
        Item::List(items) => items
            .into_iter()
            .map(|it| match it {
                Item::Atom(s) => {
                    s.parse::<i32>().map_err(|_| Error::input("module_file", format!("bad generator degree `{s}`")))
                }
                Item::List(_) => Err(Error::input("module_file", "generator degrees must be integers")),
            })
            .collect::<Result<Vec<i32>>>()?,
        Item::Atom(_) => return Err(Error::input("module_file", "`gens` must be a list")),
    };
    let rows: Vec<Vec<String>> = match parse_list(&rel_src)? {
        Item::List(items) => items
            .into_iter()
            .map(|it| match it {
                Item::List(entries) => entries
                    .into_iter()
                    .map(|e| match e {
                        Item::Atom(s) => Ok(s),
                        Item::List(_) => Err(Error::input("module_file", "relation entries must be polynomials")),
                    })
                    .collect(),
                Item::Atom(_) => Err(Error::input("module_file", "`relations` must be a list of rows")),
            })
            .collect::<Result<_>>()?,
        Item::Atom(_) => return Err(Error::input("module_file", "`relations` must be a list")),
    };
    let ncols = rows.first().map_or(0, |r| r.len());
    if !rows.is_empty() && rows.len() != gens.len() {
        return Err(Error::input(
            "shape_mismatch",
            format!("{} relation rows for {} generators", rows.len(), gens.len()),
        ));
    }
    if let Some(i) = rows.iter().position(|r| r.len() != ncols) {
        return Err(Error::input("shape_mismatch", format!("relation row {} has the wrong length", i + 1)));
    }
    let a = ring.ambient();
    let mut cols = vec![Vec::with_capacity(gens.len()); ncols];
    for row in &rows {
        for (j, s) in row.iter().enumerate() {
            cols[j].push(poly_parse(s, a)?);
        }
    }
    let cols: Vec<Vector> = cols.iter().map(|c| Vector::from_polys(c, 0)).collect();
    ModulePresentation::new(ring, gens, cols)
}

enum Item {
    Atom(String),
    List(Vec<Item>),
}

fn parse_list(src: &str) -> Result<Item> {
    let chars: Vec<char> = src.chars().collect();
    let mut pos = 0;
    let item = parse_item(&chars, &mut pos)?;
    while pos < chars.len() && chars[pos].is_whitespace() {
        pos += 1;
    }
    if pos != chars.len() {
        return Err(Error::input("module_file", format!("trailing text at column {}", pos + 1)));
    }
    Ok(item)
}

fn parse_item(chars: &[char], pos: &mut usize) -> Result<Item> {
    while *pos < chars.len() && chars[*pos].is_whitespace() {
        *pos += 1;
    }
    if *pos < chars.len() && chars[*pos] == '[' {
        *pos += 1;
        let mut items = Vec::new();
        loop {
            while *pos < chars.len() && chars[*pos].is_whitespace() {
                *pos += 1;
            }
            match chars.get(*pos) {
                Some(']') if items.is_empty() => {
                    *pos += 1;
                    return Ok(Item::List(items));
                }
                None => return Err(Error::input("module_file", "unclosed `[`")),
                _ => {}
            }
            items.push(parse_item(chars, pos)?);
            while *pos < chars.len() && chars[*pos].is_whitespace() {
                *pos += 1;
            }
            match chars.get(*pos) {
                Some(',') => *pos += 1,
                Some(']') => {
                    *pos += 1;
                    return Ok(Item::List(items));
                }
                _ => return Err(Error::input("module_file", format!("expected `,` or `]` at column {}", *pos + 1))),
            }
        }
    }
    let start = *pos;
    while *pos < chars.len() && !matches!(chars[*pos], ',' | '[' | ']') {
        *pos += 1;
    }
    let atom: String = chars[start..*pos].iter().collect::<String>().trim().to_string();
    if atom.is_empty() {
        return Err(Error::input("module_file", format!("empty entry at column {}", start + 1)));
    }
    Ok(Item::Atom(atom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r1() -> Ring {
        RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap()
    }

    #[test]
    fn parses_and_round_trips() {
        let r = r1();
        let m = present_module("gens: [0]\nrelations: [[x]]\n", &r).unwrap();
        assert_eq!(m.num_gens(), 1);
        assert_eq!(m.relations().source, vec![1]);
        assert_eq!(present_module(&m.to_text(), &r).unwrap(), m);
        let two = present_module("gens: [0, 1]\nrelations: [[x, y^2], [0, x]]", &r).unwrap();
        assert_eq!(two.relations().source, vec![1, 2]);
        assert_eq!(present_module(&two.to_text(), &r).unwrap(), two);
        let free = present_module("gens: [0, 0]\nrelations: []", &r).unwrap();
        assert!(free.is_free());
        assert_eq!(present_module(&free.to_text(), &r).unwrap(), free);
        assert_eq!(present_module("gens: [0]\nrelations: [[]]", &r).unwrap(), ModulePresentation::free(&r, vec![0]));
    }

    #[test]
    fn rejects_bad_files() {
        let r = r1();
        let e = present_module("gens: [0, 1]\nrelations: [[x], [y]]", &r).unwrap_err();
        assert_eq!(e.reason, "inhomogeneous_column");
        assert!(e.message.contains('1'));
        assert_eq!(present_module("gens: [0]\nrelations: [[z]]", &r).unwrap_err().reason, "unknown_variable");
        assert_eq!(present_module("gens: [0]", &r).unwrap_err().reason, "module_file");
        assert_eq!(present_module("gens: [0]\nrelations: [[x], [y]]", &r).unwrap_err().reason, "shape_mismatch");
        assert_eq!(present_module("gens: [0\nrelations: []", &r).unwrap_err().reason, "module_file");
    }

    #[test]
    fn entries_reduced_modulo_relations() {
        let r = r1();
        let m = present_module("gens: [0]\nrelations: [[x^2 + x*y, x^2]]", &r).unwrap();
        assert_eq!(m.relations().cols(), 1);
        assert_eq!(poly_print(&m.relations().entry(0, 0), r.ambient()), "x*y");
    }

    #[test]
    fn minimalize_prunes_units() {
        let r = r1();
        // e1 = -x e0 makes e1 redundant
        let m = present_module("gens: [0, 1]\nrelations: [[x, y, x], [1, 0, 0]]", &r).unwrap();
        let min = m.minimalize();
        assert_eq!(min.gen_degrees(), &[0]);
        assert_eq!(min.relations().cols(), 2);
        assert!(!min.relations().has_unit_entry());
        let k = ModulePresentation::residue_field(&r);
        assert_eq!(k.minimalize(), k);
    }
}
