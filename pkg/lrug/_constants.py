# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT

__version__ = "0.1.0"
__copyright__ = "2024 lrug authors"

__build_timestamp__ = "2024-06-02 11:40:17"
