# Tests for rift-workbench
