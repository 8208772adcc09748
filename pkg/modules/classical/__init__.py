from .classical import id, title, inputs, compute, render, to_pdf
