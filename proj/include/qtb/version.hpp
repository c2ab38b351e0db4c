#pragma once

#define QTB_VERSION "0.1.0"
