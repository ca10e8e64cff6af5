//! Closed-loop operation of multi-machine power grids as an alternative to
//! repeatedly solving the AC optimal power flow.
//!
//! The pipeline: parse a grid case ([`grid`]), solve power flow and the ACOPF
//! cost baseline ([`steady`]), assemble the nonlinear descriptor model of the
//! machine/network dynamics ([`ndae`]), synthesize a robust state-feedback
//! gain by semidefinite programming ([`synthesis`]), integrate the closed
//! loop under randomized load/renewable disturbances ([`sim`]), and audit
//! cost and operating-limit margins against the ACOPF ([`report`], [`runner`]).

pub mod grid;
pub mod ndae;
pub mod report;
pub mod runner;
pub mod sim;
pub mod steady;
pub mod synthesis;
