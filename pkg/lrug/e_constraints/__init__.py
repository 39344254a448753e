# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


from ._10_analysis import Analysis, phase_two, phase_three, dedupe, \
    strip_choices, analysis_key
