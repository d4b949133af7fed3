namespace qpcam {}
