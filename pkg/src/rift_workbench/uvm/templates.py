# Copyright 2025 The RIFT Workbench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
SystemVerilog source templates for the fault sequence.

Placeholders use string.Template syntax; a literal dollar sign is written
as $$.
"""

from string import Template

SEQUENCE_TEMPLATE = Template(
    """\
// Generated by rift-workbench from ${source}. Do not edit.
// ${count} fault(s) in canonical (param_index, bit_position) order.

`ifndef ${guard}
`define ${guard}

import uvm_pkg::*;
`include "uvm_macros.svh"

`ifndef RIFT_FAULT_ITEM_SV
`define RIFT_FAULT_ITEM_SV
class fault_item extends uvm_object;
  `uvm_object_utils(fault_item)

  int unsigned param_index;
  int unsigned bit_position;

  function new(string name = "fault_item");
    super.new(name);
  endfunction
endclass

typedef fault_item fault_queue_t[$$];
`endif

class ${name} extends uvm_sequence #(uvm_sequence_item);
  `uvm_object_utils(${name})

  fault_queue_t faults;

  function new(string name = "${name}");
    super.new(name);
  endfunction

  function void build_faults();
    fault_item item;
    faults.delete();
${items}  endfunction

  virtual task body();
    build_faults();
    uvm_config_db#(fault_queue_t)::set(null, "*", "${config_key}", faults);
  endtask

  static function fault_queue_t get_faults(uvm_component cntxt, string inst_name = "");
    fault_queue_t result;
    if (!uvm_config_db#(fault_queue_t)::get(cntxt, inst_name, "${config_key}", result))
      `uvm_warning("${name}", "no fault queue in config_db")
    return result;
  endfunction
endclass

`endif
"""
)

ITEM_TEMPLATE = Template(
    """\
    item = fault_item::type_id::create("fault_${position}");
    item.param_index = ${param_index};
    item.bit_position = ${bit};
    faults.push_back(item);
"""
)
