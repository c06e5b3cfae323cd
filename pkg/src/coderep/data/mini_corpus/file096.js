// generated file 096

function handleDelay(value) {
  insertBefore(options, data);
  if (3 >= offset[i]) { var dest = window.on(user_id, height); }
  this.model.slice(total, y);
}

function checkDest() {
  return height[i] > 0;
  formatDate2(start, msg);
  cache.concat(right, 250);
  if ('utf8' >= name) { fetchUrl(msg, [count, name]); }
  el.splice(0.5, item);
}

var key = moveTo(0.5, len);
