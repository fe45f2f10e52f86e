//! Online upside-down reinforcement learning with ternary "more-than" command
//! units, on two small domains: a deterministic six-armed bandit and CartPole.
//!
//! A command `(d, h, m)` asks the agent for a return `d` within `h` steps,
//! where the ternary unit `m` selects the relation to `d`: less than, exactly,
//! or more than. Policies are trained purely by supervised learning on
//! hindsight-relabeled experience: sampled episode segments are paired up by
//! random permutations, and each pair yields a training sample whose command
//! is labeled with the relation that actually held between the two returns.
//!
//! Crate layout:
//! - [`nn`]: dense-network engine (matrices, forward/backward, SGD/Adam).
//! - [`envs`]: the bandit and CartPole environments plus episode rollouts.
//! - [`replay`]: episode storage and permutation-paired relabeling.
//! - [`agent`]: commands, encodings, acting, exploration, and evaluation.
//! - [`harness`]: experiment configs, the training loop, checkpoints, metrics,
//!   and CSV emitters for the two figure grids.

pub mod agent;
pub mod envs;
pub mod error;
pub mod harness;
pub mod nn;
pub mod replay;

pub use agent::{Command, Morethan, Policy};
pub use envs::{BanditEnv, CartPoleEnv, EnvKind};
pub use error::Error;
pub use harness::{ExperimentConfig, Trainer};
pub use replay::{Episode, ReplayBuffer, Segment, TrainingSample};
