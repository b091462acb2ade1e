#pragma once

#define MOP_VERSION "0.1.0"
