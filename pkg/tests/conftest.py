# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    conftest.py
# @author  extended-oloid contributors
# @date    2026-03-14

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))
