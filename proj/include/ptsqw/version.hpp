#pragma once

#define PTSQW_VERSION "0.1.0"
