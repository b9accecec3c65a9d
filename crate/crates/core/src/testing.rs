use std::sync::Arc;

use crate::presentation::{Algebra, Presentation};

pub const S81: &str = include_str!("../../../fixtures/s81_qh.json");
pub const S82: &str = include_str!("../../../fixtures/s82.json");
pub const S825: &str = include_str!("../../../fixtures/s825.json");
pub const S84_SELFINJ: &str = include_str!("../../../fixtures/s84_selfinj.json");
pub const S84_NONSELFINJ: &str = include_str!("../../../fixtures/s84_nonselfinj.json");
pub const KX2: &str = include_str!("../../../fixtures/local_kx2.json");
pub const A2: &str = include_str!("../../../fixtures/a2_hereditary.json");
pub const RAD2: &str = include_str!("../../../fixtures/local_rad2.json");

pub fn alg(s: &str) -> Arc<Algebra> {
    Arc::new(Algebra::from_presentation(&Presentation::from_json_str(s).unwrap()).unwrap())
}

pub fn labels(p: &[Vec<String>]) -> Vec<Vec<&str>> {
    p.iter().map(|l| l.iter().map(String::as_str).collect()).collect()
}
