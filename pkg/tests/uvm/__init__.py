# Tests for rift_workbench.uvm
