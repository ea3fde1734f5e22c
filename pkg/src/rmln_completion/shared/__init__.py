"""Column names shared by the CSV writers and readers."""
