//! Routing co-simulation.
