//! The 7/15 Gauss–Kronrod rule and the shared adaptive bisection engine.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::QuadResult;
use crate::{Error, Result, ToleranceConfig};

/// Kronrod abscissae (positive half, including the center at the end).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];

/// 7-point Gauss weights.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

/// 15-point Kronrod weights.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

/// QUADPACK-style error rescaling: sharper than |K - G| alone, floored by
/// roundoff on the absolute integral.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// One Gauss–Kronrod application on [a, b]. Nodes are strictly interior.
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let eval = |x: f64| -> Result<f64> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { at: x })
        }
    };

    let f_center = eval(center)?;
    let mut res_gauss = 0.0;
    let mut res_kronrod = f_center * WGK[7];
    let mut res_abs = res_kronrod.abs();

    let mut fv1 = [0.0f64; 7];
    let mut fv2 = [0.0f64; 7];

    for j in 0..7 {
        let x = half * XGK[j];
        let v1 = eval(center - x)?;
        let v2 = eval(center + x)?;
        fv1[j] = v1;
        fv2[j] = v2;
        let sum = v1 + v2;
        res_kronrod += WGK[j] * sum;
        res_abs += WGK[j] * (v1.abs() + v2.abs());
        if j % 2 == 1 {
            // XGK[1], XGK[3], XGK[5] are the Gauss nodes; plus the center.
            res_gauss += WG[j / 2] * sum;
        }
    }
    res_gauss += WG[3] * f_center;

    let mean = res_kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let err = ((res_kronrod - res_gauss) * half).abs();
    let value = res_kronrod * half;
    let abs_half = half.abs();
    Ok((
        value,
        rescale_error(err, res_abs * abs_half, res_asc * abs_half),
    ))
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

struct HeapEntry {
    error: f64,
    index: usize,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error && self.index == other.index
    }
}
impl Eq for HeapEntry {}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| self.index.cmp(&other.index))
    }
}

fn kahan_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        comp += if sum.abs() >= v.abs() {
            (sum - t) + v
        } else {
            (v - t) + sum
        };
        sum = t;
    }
    sum + comp
}

/// Adaptive bisection over a fixed list of seed panels. The worst panel (by
/// error estimate) is split until the summed estimate meets
/// max(abs_tol, rel_tol * |value|) or the evaluation budget runs out.
pub(super) fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    seeds: &[(f64, f64)],
    cfg: &ToleranceConfig,
    extra_error: f64,
    truncation_point: Option<f64>,
) -> Result<QuadResult> {
    let mut evals: u64 = 0;
    let mut panels: Vec<Panel> = Vec::with_capacity(seeds.len() * 4);
    let mut heap: BinaryHeap<HeapEntry> = BinaryHeap::new();
    // Panels narrower than this are not split further (integrable endpoint
    // singularities bottom out here).
    let min_width = |a: f64, b: f64| 32.0 * f64::EPSILON * a.abs().max(b.abs()).max(1.0);

    let mut err_sum = 0.0f64;
    let mut val_sum = 0.0f64;
    for &(a, b) in seeds {
        let (value, error) = qk15(f, a, b)?;
        evals += 15;
        err_sum += error;
        val_sum += value;
        heap.push(HeapEntry {
            error,
            index: panels.len(),
        });
        panels.push(Panel { a, b, value, error });
    }

    let finish = |panels: &mut Vec<Panel>, evals: u64| -> QuadResult {
        panels.sort_by(|p, q| p.a.total_cmp(&q.a));
        let value = kahan_sum(panels.iter().map(|p| p.value));
        let error = kahan_sum(panels.iter().map(|p| p.error)) + extra_error;
        QuadResult {
            value,
            error_estimate: error,
            evaluations: evals,
            truncation_point,
        }
        .floor_error()
    };

    loop {
        // Running sums drift a little; the final report recomputes exactly.
        let target = cfg.abs_tol.max(cfg.rel_tol * val_sum.abs());
        if err_sum + extra_error <= target {
            return Ok(finish(&mut panels, evals));
        }

        // Pop the worst splittable panel.
        let mut split_index = None;
        while let Some(entry) = heap.pop() {
            let p = &panels[entry.index];
            if p.b - p.a > min_width(p.a, p.b) {
                split_index = Some(entry.index);
                break;
            }
            // Unsplittable panel: its error stays in the sum, but it no
            // longer participates in refinement.
        }
        let Some(idx) = split_index else {
            // Nothing left to refine.
            return Ok(finish(&mut panels, evals));
        };

        if evals + 30 > cfg.max_evals {
            return Err(Error::BudgetExceeded {
                best: finish(&mut panels, evals),
            });
        }

        let (a, b) = (panels[idx].a, panels[idx].b);
        let mid = 0.5 * (a + b);
        let (v1, e1) = qk15(f, a, mid)?;
        let (v2, e2) = qk15(f, mid, b)?;
        evals += 30;
        err_sum += e1 + e2 - panels[idx].error;
        val_sum += v1 + v2 - panels[idx].value;

        panels[idx] = Panel {
            a,
            b: mid,
            value: v1,
            error: e1,
        };
        heap.push(HeapEntry {
            error: e1,
            index: idx,
        });
        heap.push(HeapEntry {
            error: e2,
            index: panels.len(),
        });
        panels.push(Panel {
            a: mid,
            b,
            value: v2,
            error: e2,
        });
    }
}
