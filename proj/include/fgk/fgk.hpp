// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fgk/abelian.hpp"
#include "fgk/bigint.hpp"
#include "fgk/coset_graph.hpp"
#include "fgk/errors.hpp"
#include "fgk/format.hpp"
#include "fgk/fox.hpp"
#include "fgk/inference.hpp"
#include "fgk/laurent.hpp"
#include "fgk/link.hpp"
#include "fgk/nielsen.hpp"
#include "fgk/one_relator.hpp"
#include "fgk/presentation.hpp"
#include "fgk/report.hpp"
#include "fgk/smith.hpp"
#include "fgk/splitting.hpp"
#include "fgk/word.hpp"
