//! Closed-loop two-vehicle safety of the car-following kernel.

use forksim_core::carfollow::{acceleration, FollowerView, GhrParams, StateThresholds};
use forksim_core::types::{LeaderContext, VehicleClass, VehicleKind};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const STEPS: usize = 10_000;

fn kind_strategy() -> impl Strategy<Value = VehicleKind> {
    prop::sample::select(VehicleKind::ALL.to_vec())
}

/// Leader acceleration: piecewise constant within the leader's normal
/// envelope, with occasional braking to a full stop.
struct LeaderDriver {
    rng: ChaCha8Rng,
    a: f64,
    hold: usize,
}

impl LeaderDriver {
    fn next(&mut self, v: f64, class: &VehicleClass, v_max: f64) -> f64 {
        if self.hold == 0 {
            self.hold = self.rng.random_range(10..100);
            self.a = if self.rng.random_bool(0.2) {
                class.a_normal
            } else {
                self.rng.random_range(class.a_normal..=class.a_max)
            };
        }
        self.hold -= 1;
        if v >= v_max && self.a > 0.0 {
            0.0
        } else {
            self.a
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn follower_never_overlaps_leader(
        follower_kind in kind_strategy(),
        leader_kind in kind_strategy(),
        v0 in 0.0f64..14.0,
        vl0 in 0.0f64..14.0,
        v_desired in 2.0f64..14.0,
        extra in 0.0f64..80.0,
        leader_cap in 1.0f64..14.0,
        dt in prop::sample::select(vec![0.05, 0.1]),
        seed in any::<u64>(),
    ) {
        let ghr = GhrParams::default();
        let th = StateThresholds::default();
        let fc = VehicleClass::default_for(follower_kind);
        let lc = VehicleClass::default_for(leader_kind);
        let d_emerg = th.emergency_distance(v0, vl0, fc.reaction_time, fc.a_normal, fc.standstill_buffer());
        let mut gap = d_emerg + extra;
        let (mut v, mut vl, mut al) = (v0, vl0, 0.0);
        let mut driver = LeaderDriver { rng: ChaCha8Rng::seed_from_u64(seed), a: 0.0, hold: 0 };
        let follower = |v: f64| FollowerView { v, v_desired, reaction_time: fc.reaction_time, class: &fc };

        for step in 0..STEPS {
            let ctx = LeaderContext::new(gap, v, vl, al, lc.length);
            let (_, a) = acceleration(&follower(v), Some(&ctx), &ghr, &th, dt)
                .map_err(|e| TestCaseError::fail(format!("step {step}: {e}")))?;
            let a_lead = driver.next(vl, &lc, leader_cap);

            // Both move on the state at t, semi-implicit Euler.
            let v_new = (v + a * dt).max(0.0);
            let vl_new = (vl + a_lead * dt).max(0.0);
            gap += (vl_new - v_new) * dt;
            al = (vl_new - vl) / dt;
            v = v_new;
            vl = vl_new;
            prop_assert!(gap >= 0.0, "gap {gap} at step {step} (v {v}, leader v {vl})");
        }
    }
}
