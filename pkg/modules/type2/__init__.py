from .type2 import id, title, inputs, compute, render, to_pdf
