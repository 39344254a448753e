# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


from ._10_chart import chart_parse, OracleResult, Derivation, DerivLeaf, \
    DerivNode, format_derivation
