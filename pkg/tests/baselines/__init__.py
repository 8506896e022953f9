# Tests for rift_workbench.baselines
