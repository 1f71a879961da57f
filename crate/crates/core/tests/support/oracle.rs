//! Reference implementation of the inference chain, written without the
//! crate under test. Integration uses the midpoint rule on a 0.001 grid,
//! ten times finer than the production quadrature.

const NO: [f64; 4] = [0.0, 5.0, 16.5, 21.5];
const PARTIAL: [f64; 4] = [16.5, 21.5, 33.0, 38.0];
const YES: [f64; 4] = [33.0, 38.0, 50.0, 50.0];

pub const OUTPUT: [[f64; 4]; 5] = [
    [0.0, 5.0, 10.0, 15.0],
    [10.0, 15.0, 20.0, 25.0],
    [20.0, 25.0, 30.0, 35.0],
    [30.0, 35.0, 40.0, 45.0],
    [40.0, 45.0, 50.0, 50.0],
];

pub const STEP: f64 = 0.001;

/// Trapezoid membership where a shape touching 0 or 50 is flat out to that edge.
pub fn mu([a, b, c, d]: [f64; 4], x: f64) -> f64 {
    if a == 0.0 && x <= b {
        return 1.0;
    }
    if d == 50.0 && x >= c {
        return 1.0;
    }
    if x <= a || x >= d {
        0.0
    } else if x < b {
        (x - a) / (b - a)
    } else if x <= c {
        1.0
    } else {
        (d - x) / (d - c)
    }
}

/// Consequent index for answer terms 0 = No, 1 = Partial, 2 = Yes.
fn consequent(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 0) => 0,
        (0, 1) | (1, 1) => 1,
        (0, 2) => 2,
        (1, 2) => 3,
        (2, 2) => 4,
        _ => unreachable!(),
    }
}

pub fn clip_levels(x: f64, y: f64) -> [f64; 5] {
    let fx = [mu(NO, x), mu(PARTIAL, x), mu(YES, x)];
    let fy = [mu(NO, y), mu(PARTIAL, y), mu(YES, y)];
    let mut clip = [0.0f64; 5];
    for (i, &a) in fx.iter().enumerate() {
        for (j, &b) in fy.iter().enumerate() {
            let k = consequent(i, j);
            clip[k] = clip[k].max(a.min(b));
        }
    }
    clip
}

/// Centroid of the clipped union of output terms.
pub fn centroid(clip: &[f64; 5]) -> f64 {
    let n = (50.0 / STEP).round() as usize;
    let (mut num, mut den) = (0.0, 0.0);
    for k in 0..n {
        let x = (k as f64 + 0.5) * STEP;
        let m = OUTPUT
            .iter()
            .zip(clip)
            .map(|(&shape, &h)| mu(shape, x).min(h))
            .fold(0.0, f64::max);
        num += x * m;
        den += m;
    }
    num / den
}

pub fn infer(x: f64, y: f64) -> f64 {
    centroid(&clip_levels(x, y))
}

/// Level-wise left-to-right reduction with the odd tail carried up.
pub fn reduce(values: &[f64]) -> f64 {
    let mut level = values.to_vec();
    while level.len() > 1 {
        level = level
            .chunks(2)
            .map(|c| {
                if c.len() == 2 {
                    infer(c[0], c[1])
                } else {
                    c[0]
                }
            })
            .collect();
    }
    level[0]
}

/// Core asset, product development, management and overall scores.
pub fn assess(answers: &[f64; 17]) -> [f64; 4] {
    let core = reduce(&answers[0..5]);
    let product = reduce(&answers[5..10]);
    let management = reduce(&answers[10..17]);
    [
        core,
        product,
        management,
        reduce(&[core, product, management]),
    ]
}
