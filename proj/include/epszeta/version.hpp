#pragma once

#define EPSZETA_VERSION "0.1.0"
