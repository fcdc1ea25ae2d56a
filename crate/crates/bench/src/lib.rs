// Benchmark-only crate; see benches/proof.rs.
