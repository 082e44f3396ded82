"""mapper-signatures library: covers, extended persistence, Reeb graphs, Mapper and signature distances."""
