//! Input files and argument parsing for the CLI.

use std::path::Path;

use serde::Deserialize;

use super::InputArgs;
use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::extalg::ExtVector;
use crate::fock::FockVector;
use crate::grassmann::{plucker, PluckerVector, Subspace};
use crate::kernel::{Rat, RatMatrix};
use crate::tau::{tau_from_affine, tau_from_symmetric, TauPoly};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AffineFile {
    n: usize,
    affine: RatMatrix,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SubspaceFile {
    n: usize,
    w: RatMatrix,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Coord {
    lambda: Partition,
    c: Rat,
}

#[derive(Deserialize)]
struct PluckerFile {
    n: usize,
    plucker: Vec<Coord>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// `{"n": N, "affine": [[...]]}`, checked for shape only.
pub fn load_affine(path: &Path) -> Result<RatMatrix> {
    let f: AffineFile = parse_json(path)?;
    if f.affine.rows() != f.n || f.affine.cols() != f.n {
        return Err(Error::Dimension(format!("affine matrix is {}x{}, expected {}x{}", f.affine.rows(), f.affine.cols(), f.n, f.n)));
    }
    Ok(f.affine)
}

/// One of the four accepted inputs; exactly one flag must be given.
#[derive(Clone, Debug)]
pub enum Source {
    Affine(RatMatrix),
    Subspace(Subspace),
    Plucker(PluckerVector),
    Fock(FockVector),
}

impl Source {
    pub fn load(args: &InputArgs) -> Result<Self> {
        let given = [&args.affine, &args.subspace, &args.plucker, &args.fock].iter().filter(|x| x.is_some()).count();
        if given != 1 {
            return Err(Error::InvalidArgument("give exactly one of --affine, --subspace, --plucker, --fock".into()));
        }
        if let Some(p) = &args.affine {
            return Ok(Source::Affine(load_affine(p)?));
        }
        if let Some(p) = &args.subspace {
            let f: SubspaceFile = parse_json(p)?;
            return Ok(Source::Subspace(Subspace::from_matrix(f.n, f.w)?));
        }
        if let Some(p) = &args.plucker {
            let f: PluckerFile = parse_json(p)?;
            let mut seen = std::collections::BTreeSet::new();
            for c in &f.plucker {
                if !seen.insert(c.lambda.clone()) {
                    return Err(Error::Parse(format!("coordinate {} given twice", c.lambda)));
                }
            }
            return Ok(Source::Plucker(PluckerVector::new(f.n, f.plucker.into_iter().map(|c| (c.lambda, c.c)))?));
        }
        let p = args.fock.as_ref().expect("counted above");
        Ok(Source::Fock(parse_json(p)?))
    }

    fn frame(&self) -> Option<Subspace> {
        match self {
            Source::Affine(a) => Some(Subspace::from_affine_unchecked(a).expect("square")),
            Source::Subspace(w) => Some(w.clone()),
            _ => None,
        }
    }

    pub fn plucker(&self) -> Result<PluckerVector> {
        match self {
            Source::Plucker(p) => Ok(p.clone()),
            Source::Fock(_) => Err(Error::InvalidArgument("a Fock vector does not determine Plücker coordinates here".into())),
            _ => plucker(&self.frame().expect("frame")),
        }
    }

    /// `w_1 ∧ ... ∧ w_N` for frames, the Plücker vector's exterior form otherwise.
    pub fn wedge(&self) -> Result<ExtVector> {
        match self.frame() {
            Some(w) => Ok(w.wedge()),
            None => {
                let pi = self.plucker()?;
                let n = pi.n as i64;
                Ok(pi.to_ext_vector().scale(&Rat::sign(n * (n - 1) / 2)))
            }
        }
    }

    /// The τ-function of the input. With `symmetric` an affine input must be symmetric.
    pub fn tau(&self, symmetric: bool) -> Result<TauPoly> {
        match self {
            Source::Affine(a) if symmetric || a.is_symmetric() => tau_from_symmetric(a),
            Source::Affine(a) => tau_from_affine(a),
            Source::Subspace(w) => TauPoly::from_subspace(w),
            Source::Plucker(p) => TauPoly::from_plucker(p, p.n * p.n),
            Source::Fock(_) => Err(Error::InvalidArgument("τ needs a plane or Plücker input".into())),
        }
    }
}

/// `2,1` or `[2,1]`; the empty string is the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    if s.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {p:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
}

pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(|x| x.parse()).collect()
}
